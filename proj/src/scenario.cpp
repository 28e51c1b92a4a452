// Copyright 2026 The varbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "varbound/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "varbound/format.hpp"

namespace varbound {
namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kParseError, "field '" + path + "': " + what);
}

// Re-raise a validation error with the offending field attached, keeping its code.
template <typename F>
auto at_field(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParseError) throw;
    throw Error(e.code(), "field '" + path + "': " + e.detail());
  }
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

void reject_unknown_keys(const Json& obj, const std::string& path, std::set<std::string> allowed) {
  for (const auto& [key, value] : obj.items())
    if (!allowed.contains(key)) fail(path.empty() ? key : path + "." + key, "unknown key");
}

double parse_real(const Json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) fail(path, "expected a finite number");
  return x;
}

Complex parse_complex(const Json& j, const std::string& path) {
  if (j.is_number()) return parse_real(j, path);
  if (j.is_array() && j.size() == 2)
    return {parse_real(j[0], path + "[0]"), parse_real(j[1], path + "[1]")};
  fail(path, "expected a number or a [re, im] pair");
}

CMatrix parse_matrix(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) fail(path + "[0]", "expected a non-empty row array");
  const std::size_t cols = j[0].size();
  std::vector<Complex> entries;
  entries.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_path = path + "[" + std::to_string(r) + "]";
    if (!j[r].is_array()) fail(row_path, "expected a row array");
    if (j[r].size() != cols)
      fail(row_path, "row has " + std::to_string(j[r].size()) + " entries, expected " +
                         std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c)
      entries.push_back(parse_complex(j[r][c], row_path + "[" + std::to_string(c) + "]"));
  }
  return {rows, cols, std::move(entries)};
}

QuantumState parse_state(const Json& j) {
  if (!j.is_object() || j.size() != 1) fail("state", "expected exactly one of bloch, matrix, pure");
  if (j.contains("bloch")) {
    const Json& b = j["bloch"];
    if (!b.is_array() || b.size() != 3) fail("state.bloch", "expected [x, y, z]");
    const BlochVector r{parse_real(b[0], "state.bloch[0]"), parse_real(b[1], "state.bloch[1]"),
                        parse_real(b[2], "state.bloch[2]")};
    return at_field("state.bloch", [&] { return state_from_bloch(r); });
  }
  if (j.contains("matrix")) {
    const CMatrix m = parse_matrix(j["matrix"], "state.matrix");
    return at_field("state.matrix", [&] { return validate_state(m); });
  }
  if (j.contains("pure")) {
    const Json& v = j["pure"];
    if (!v.is_array() || v.empty()) fail("state.pure", "expected a non-empty amplitude array");
    std::vector<Complex> amps;
    double norm2 = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      amps.push_back(parse_complex(v[i], "state.pure[" + std::to_string(i) + "]"));
      norm2 += std::norm(amps.back());
    }
    if (norm2 == 0.0) fail("state.pure", "zero vector");
    const std::size_t d = amps.size();
    CMatrix rho(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) rho(r, c) = amps[r] * std::conj(amps[c]) / norm2;
    return at_field("state.pure", [&] { return validate_state(rho); });
  }
  fail("state", "expected exactly one of bloch, matrix, pure");
}

Observable parse_observable(const Json& j, const std::string& path, std::size_t dim,
                            const std::string& default_label) {
  Observable obs = [&]() -> Observable {
    if (j.is_string()) {
      const auto name = j.get<std::string>();
      return at_field(path, [&] { return named_pauli(name); });
    }
    if (j.is_array()) {
      CMatrix m = parse_matrix(j, path);
      return at_field(path, [&] { return Observable(default_label, std::move(m)); });
    }
    if (j.is_object()) {
      reject_unknown_keys(j, path, {"label", "matrix"});
      if (!j.contains("matrix")) fail(path + ".matrix", "missing");
      std::string label = default_label;
      if (j.contains("label")) {
        if (!j["label"].is_string()) fail(path + ".label", "expected a string");
        label = j["label"].get<std::string>();
      }
      CMatrix m = parse_matrix(j["matrix"], path + ".matrix");
      return at_field(path, [&] { return Observable(std::move(label), std::move(m)); });
    }
    fail(path, "expected a Pauli name, a matrix or {label, matrix}");
  }();
  if (obs.dim() != dim)
    throw Error(ErrorCode::kDimMismatch, "field '" + path + "': observable has dimension " +
                                             std::to_string(obs.dim()) + ", state has " +
                                             std::to_string(dim));
  return obs;
}

std::vector<Observable> parse_observable_list(const Json& j, const std::string& key, std::size_t dim,
                                              const std::string& prefix) {
  if (!j.is_array() || j.empty()) fail(key, "expected a non-empty array of observables");
  std::vector<Observable> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_observable(j[i], key + "[" + std::to_string(i) + "]", dim,
                                   prefix + std::to_string(i + 1)));
  return out;
}

void bound_json(OrderedJson& parent, const std::string& key, const BoundValue& b) {
  if (b.present()) {
    parent[key] = *b.value;
  } else {
    parent[key] = nullptr;
    parent[key + "_reason"] = b.reason;
  }
}

OrderedJson complex_json(Complex z) { return OrderedJson::array({z.real(), z.imag()}); }

OrderedJson labels(const std::vector<Observable>& obs) {
  OrderedJson out = OrderedJson::array();
  for (const Observable& o : obs) out.push_back(o.label());
  return out;
}

void note_degenerate(std::vector<std::string>& out, const std::string& bound, const BoundValue& b) {
  if (b.present()) return;
  for (ErrorCode code : {ErrorCode::kAllCompatible, ErrorCode::kAllCovariancesVanish,
                         ErrorCode::kCommutatorStructureViolated})
    if (b.reason == error_name(code)) out.push_back(bound + ": " + b.reason);
}

std::vector<Observable> paulis(std::initializer_list<const char*> names) {
  std::vector<Observable> out;
  for (const char* n : names) out.push_back(named_pauli(n));
  return out;
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  const Json root = parse_json(text);
  if (!root.is_object()) fail("<root>", "expected a JSON object");
  reject_unknown_keys(root, "", {"state", "observables_a", "observables_b", "pati_c"});
  if (!root.contains("state")) fail("state", "missing");
  if (!root.contains("observables_a")) fail("observables_a", "missing");
  QuantumState state = parse_state(root["state"]);
  const std::size_t dim = state.dim();
  Scenario sc{std::move(state), parse_observable_list(root["observables_a"], "observables_a", dim, "A"),
              std::nullopt, std::nullopt};
  if (root.contains("observables_b"))
    sc.observables_b = parse_observable_list(root["observables_b"], "observables_b", dim, "B");
  if (root.contains("pati_c")) sc.pati_c = parse_observable(root["pati_c"], "pati_c", dim, "C");
  return sc;
}

EvalResult evaluate(const Scenario& sc) {
  const QuantumState& s = sc.state;
  EvalResult result;
  OrderedJson report;
  report["dim"] = s.dim();
  report["purity"] = s.purity();
  report["observables_a"] = labels(sc.observables_a);
  if (sc.observables_b) report["observables_b"] = labels(*sc.observables_b);

  const SumBoundReport sum = sum_report(s, sc.observables_a);
  const GramMatrix gram = build_gram(s, sc.observables_a);
  OrderedJson sj;
  sj["lhs"] = sum.lhs;
  bound_json(sj, "thm1", sum.thm1);
  bound_json(sj, "maccone", sum.maccone);
  bound_json(sj, "chen_fei", sum.chen_fei);
  bound_json(sj, "cor3", sum.cor3);
  bound_json(sj, "pairwise_rur", sum.pairwise_rur);
  sj["lambda_max"] = sum.lambda_max;
  sj["sigma_max"] = sum.sigma_max;
  OrderedJson variances = OrderedJson::array();
  for (const Observable& a : sc.observables_a) variances.push_back(variance(s, a));
  sj["variances"] = variances;
  OrderedJson m = OrderedJson::array();
  for (std::size_t i = 0; i < gram.n(); ++i) {
    OrderedJson row = OrderedJson::array();
    for (std::size_t j = 0; j < gram.n(); ++j) row.push_back(complex_json(gram.m_matrix(i, j)));
    m.push_back(row);
  }
  sj["gram_matrix"] = m;
  report["sum"] = sj;
  note_degenerate(result.degenerate, "thm1", sum.thm1);
  note_degenerate(result.degenerate, "cor3", sum.cor3);

  if (sc.observables_b) {
    const auto& b = *sc.observables_b;
    const ProductBoundReport prod = product_report(s, sc.observables_a, b);
    const OverlapMatrix g = build_overlap(s, sc.observables_a, b);
    OrderedJson pj;
    pj["lhs"] = prod.lhs;
    bound_json(pj, "thm2", prod.thm2);
    bound_json(pj, "cor2", prod.cor2);
    pj["c22"] = prod.c22;
    pj["sigma_max"] = prod.sigma_max;
    OrderedJson gm = OrderedJson::array();
    for (std::size_t i = 0; i < g.n; ++i) {
      OrderedJson row = OrderedJson::array();
      for (std::size_t j = 0; j < g.m; ++j) row.push_back(g(i, j));
      gm.push_back(row);
    }
    pj["overlap_matrix"] = gm;
    report["product"] = pj;
    note_degenerate(result.degenerate, "thm2", prod.thm2);
    note_degenerate(result.degenerate, "cor2", prod.cor2);
  }

  OrderedJson pairs = OrderedJson::array();
  const auto add_pair = [&](const Observable& a, const Observable& b) {
    const PairBounds pb = pair_bounds(s, a, b);
    const PairMoments pm = pair_moments(s, a, b);
    OrderedJson pj;
    pj["a"] = a.label();
    pj["b"] = b.label();
    pj["rur"] = pb.rur;
    pj["sur"] = pb.sur;
    pj["commutator_mean"] = complex_json(pm.comm_mean);
    pj["anticommutator_mean"] = complex_json(pm.anticomm_mean);
    pj["covariance"] = complex_json(pm.covariance);
    pairs.push_back(pj);
  };
  const auto& a = sc.observables_a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) add_pair(a[i], a[j]);
  if (sc.observables_b)
    for (const Observable& x : a)
      for (const Observable& y : *sc.observables_b) add_pair(x, y);
  report["pairs"] = pairs;

  if (sc.pati_c) {
    OrderedJson pj;
    try {
      const auto& b = sc.observables_b ? *sc.observables_b : std::vector<Observable>{};
      const PatiBounds p = bound_pati(s, a, b, *sc.pati_c);
      pj["lhs"] = p.lhs;
      pj["rhs"] = p.rhs;
    } catch (const Error& e) {
      pj["lhs"] = nullptr;
      pj["rhs"] = nullptr;
      pj["reason"] = std::string(error_name(e.code()));
      if (is_degenerate_bound(e.code()))
        result.degenerate.push_back("pati: " + std::string(error_name(e.code())));
    }
    report["pati"] = pj;
  }

  OrderedJson degenerate = OrderedJson::array();
  for (const std::string& d : result.degenerate) degenerate.push_back(d);
  report["degenerate"] = degenerate;
  result.report_json = report.dump(2) + "\n";
  return result;
}

std::vector<double> SweepSpec::thetas() const {
  std::vector<double> out(static_cast<std::size_t>(points));
  const double step = (theta_end - theta_start) / static_cast<double>(points - 1);
  for (int k = 0; k < points; ++k) out[static_cast<std::size_t>(k)] = theta_start + k * step;
  out.back() = theta_end;
  return out;
}

BlochVector SweepSpec::bloch_at(double theta) const {
  if (family == SweepFamily::kFig2) return {std::cos(theta), 0.0, 0.0};
  const double c = radius * std::cos(theta);
  const double s = radius * std::sin(theta);
  switch (plane) {
    case BlochPlane::kXY: return {c, s, 0.0};
    case BlochPlane::kYZ: return {0.0, c, s};
    case BlochPlane::kZX: return {s, 0.0, c};
  }
  return {};
}

SweepSpec figure_spec(std::string_view id, int points) {
  if (points < 2) throw Error(ErrorCode::kInvalidArgument, "points must be >= 2");
  SweepSpec spec;
  spec.theta_start = 0.0;
  spec.theta_end = std::numbers::pi;
  spec.points = points;
  spec.plane = BlochPlane::kXY;
  if (id == "fig1") {
    spec.family = SweepFamily::kFig1;
    spec.radius = std::sqrt(3.0) / 2.0;
    spec.observables_a = paulis({"sigma_x", "sigma_z"});
  } else if (id == "fig2") {
    spec.family = SweepFamily::kFig2;
    spec.radius = 1.0;
    spec.observables_a = paulis({"sigma_x", "sigma_y", "sigma_z"});
  } else if (id == "fig3") {
    spec.family = SweepFamily::kFig3;
    spec.radius = 0.5;
    spec.observables_a = paulis({"sigma_z"});
    spec.observables_b = paulis({"sigma_x", "sigma_y"});
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown figure id '" + std::string(id) + "'");
  }
  return spec;
}

SweepSpec parse_sweep_spec(std::string_view text) {
  const Json root = parse_json(text);
  if (!root.is_object()) fail("<root>", "expected a JSON object");
  reject_unknown_keys(root, "", {"family", "radius", "plane", "observables_a", "observables_b",
                                 "theta_start", "theta_end", "points"});
  if (!root.contains("family") || !root["family"].is_string()) fail("family", "expected a string");
  const auto family = root["family"].get<std::string>();

  int points = 181;
  if (root.contains("points")) {
    if (!root["points"].is_number_integer()) fail("points", "expected an integer");
    points = root["points"].get<int>();
    if (points < 2) fail("points", "must be >= 2");
  }

  SweepSpec spec;
  if (family == "bloch_circle") {
    spec.family = SweepFamily::kBlochCircle;
    if (!root.contains("radius")) fail("radius", "missing");
    spec.radius = parse_real(root["radius"], "radius");
    if (spec.radius < 0.0 || spec.radius > 1.0 + kBlochTolerance) fail("radius", "must lie in [0, 1]");
    if (root.contains("plane")) {
      if (!root["plane"].is_string()) fail("plane", "expected \"xy\", \"yz\" or \"zx\"");
      const auto plane = root["plane"].get<std::string>();
      if (plane == "xy") spec.plane = BlochPlane::kXY;
      else if (plane == "yz") spec.plane = BlochPlane::kYZ;
      else if (plane == "zx") spec.plane = BlochPlane::kZX;
      else fail("plane", "expected \"xy\", \"yz\" or \"zx\"");
    }
    if (!root.contains("observables_a")) fail("observables_a", "missing");
    spec.observables_a = parse_observable_list(root["observables_a"], "observables_a", 2, "A");
    if (root.contains("observables_b"))
      spec.observables_b = parse_observable_list(root["observables_b"], "observables_b", 2, "B");
    spec.points = points;
    spec.theta_start = 0.0;
    spec.theta_end = std::numbers::pi;
  } else if (family == "fig1" || family == "fig2" || family == "fig3") {
    for (const char* key : {"radius", "plane", "observables_a", "observables_b"})
      if (root.contains(key)) fail(key, "only valid for the bloch_circle family");
    spec = figure_spec(family, points);
  } else {
    fail("family", "expected fig1, fig2, fig3 or bloch_circle");
  }
  if (root.contains("theta_start")) spec.theta_start = parse_real(root["theta_start"], "theta_start");
  if (root.contains("theta_end")) spec.theta_end = parse_real(root["theta_end"], "theta_end");
  return spec;
}

std::size_t SweepTable::column(std::string_view name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end())
    throw Error(ErrorCode::kInvalidArgument, "no column '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - columns.begin());
}

double SweepTable::at(std::size_t row, std::string_view name) const {
  const auto& cell = rows.at(row).at(column(name));
  if (!cell) throw Error(ErrorCode::kInvalidArgument, "cell '" + std::string(name) + "' is empty");
  return *cell;
}

SweepTable run_sweep(const SweepSpec& spec, int threads) {
  if (spec.points < 2) throw Error(ErrorCode::kInvalidArgument, "points must be >= 2");
  if (spec.observables_a.empty()) throw Error(ErrorCode::kEmptySet, "sweep has no observables");
  SweepTable table;
  if (spec.product_form()) {
    table.columns = {"theta", "lhs", "thm2", "cor2", "c22", "sigma_max"};
  } else {
    const bool pair = spec.observables_a.size() <= 2;
    table.columns = {"theta", "lhs", "thm1", pair ? "maccone" : "chen_fei",
                     "cor3", "pairwise_rur", "lambda_max", "sigma_max"};
  }

  const std::vector<double> grid = spec.thetas();
  table.rows.resize(grid.size());
  const auto eval_row = [&](std::size_t k) {
    const double theta = grid[k];
    const QuantumState s = state_from_bloch(spec.bloch_at(theta));
    std::vector<std::optional<double>>& row = table.rows[k];
    if (spec.product_form()) {
      const ProductBoundReport r = product_report(s, spec.observables_a, spec.observables_b);
      row = {theta, r.lhs, r.thm2.value, r.cor2.value, r.c22, r.sigma_max};
    } else {
      const SumBoundReport r = sum_report(s, spec.observables_a);
      const BoundValue& pair_or_cf = spec.observables_a.size() <= 2 ? r.maccone : r.chen_fei;
      row = {theta, r.lhs, r.thm1.value, pair_or_cf.value, r.cor3.value, r.pairwise_rur.value,
             r.lambda_max, r.sigma_max};
    }
  };
  const auto worker = [&](std::size_t offset, std::size_t stride) {
    for (std::size_t k = offset; k < grid.size(); k += stride) eval_row(k);
  };
  if (threads <= 1) {
    worker(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back(worker, static_cast<std::size_t>(t), static_cast<std::size_t>(threads));
  }
  return table;
}

std::string to_csv(const SweepTable& table) {
  std::ostringstream os;
  for (std::size_t c = 0; c < table.columns.size(); ++c) os << (c ? "," : "") << table.columns[c];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ',';
      if (row[c]) os << format_number(*row[c]);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace varbound
