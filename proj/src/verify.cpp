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

#include "varbound/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "varbound/format.hpp"

namespace varbound {
namespace {

constexpr double kIdentityTolerance = 1e-10;

std::string degenerate_note(const std::string& check, const Error& e, const std::string& context) {
  return check + ": " + std::string(error_name(e.code())) + " (" + context + ")";
}

// Identity checks are recorded as lhs = 0, rhs = observed deviation, so the
// margin is minus the deviation.
CheckResult identity_check(std::string name, double deviation, const std::string& context) {
  return CheckResult::make(std::move(name), 0.0, deviation, context, kIdentityTolerance);
}

void structural_checks(const QuantumState& s, ObservableSet obs_a, ObservableSet obs_b,
                       const std::string& context, std::vector<CheckResult>& out) {
  const GramMatrix gram = build_gram(s, obs_a);
  const std::size_t n = obs_a.size();

  out.push_back(CheckResult::make("gram_psd", min_eigenvalue(gram.m_matrix), 0.0, context,
                                  kIdentityTolerance));

  double diag_dev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = std::abs(gram.m_matrix(i, i));
    diag_dev = std::max(diag_dev, std::min(d, std::abs(gram.m_matrix(i, i) - 1.0)));
  }
  out.push_back(identity_check("gram_unit_diagonal", diag_dev, context));
  out.push_back(CheckResult::make("lambda_max_le_n", static_cast<double>(n), gram.lambda_max,
                                  context, kIdentityTolerance));

  const OverlapMatrix overlap = build_overlap(s, obs_a, obs_b);
  const double g_max = *std::max_element(overlap.g_matrix.begin(), overlap.g_matrix.end());
  const double g_min = *std::min_element(overlap.g_matrix.begin(), overlap.g_matrix.end());
  out.push_back(CheckResult::make("overlap_entries_le_1", 1.0, g_max, context, kIdentityTolerance));
  out.push_back(CheckResult::make("overlap_entries_ge_0", g_min, 0.0, context, kIdentityTolerance));

  // sqrt(rho) route: explicit normalized deviations and Frobenius products.
  std::vector<CMatrix> p;
  std::vector<CMatrix> y;
  for (const Observable& a : obs_a) p.push_back(normalized_deviation(s, a));
  for (const Observable& b : obs_b) y.push_back(normalized_deviation(s, b));

  double norm_dev = 0.0;
  for (const CMatrix& pi : p) {
    const double nrm = pi.frobenius_norm();
    if (nrm > 0.0) norm_dev = std::max(norm_dev, std::abs(nrm - 1.0));
  }
  out.push_back(identity_check("deviation_unit_norm", norm_dev, context));

  double gram_route = 0.0;
  double cov_route = 0.0;
  Complex sum_cov = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      gram_route = std::max(gram_route, std::abs(gram.m_matrix(i, j) - frobenius_inner(p[i], p[j])));
      const Complex cov = pair_moments(s, obs_a[i], obs_a[j]).covariance;
      cov_route = std::max(
          cov_route, std::abs(cov - gram.deltas[i] * gram.m_matrix(i, j) * gram.deltas[j]));
      sum_cov += cov;
    }
  const double sum_dev = std::abs(sum_cov - variance(s, sum_of(obs_a)));
  out.push_back(identity_check("gram_route", gram_route, context));
  out.push_back(identity_check("covariance_route", cov_route, context));
  out.push_back(identity_check("sum_identity", sum_dev, context));

  double overlap_route = 0.0;
  double sur_identity = 0.0;
  for (std::size_t i = 0; i < overlap.n; ++i)
    for (std::size_t j = 0; j < overlap.m; ++j) {
      overlap_route =
          std::max(overlap_route, std::abs(overlap(i, j) - std::abs(frobenius_inner(p[i], y[j]))));
      const Complex cov = pair_moments(s, obs_a[i], obs_b[j]).covariance;
      sur_identity =
          std::max(sur_identity, std::abs(std::norm(cov) - pair_bounds(s, obs_a[i], obs_b[j]).sur));
    }
  out.push_back(identity_check("overlap_route", overlap_route, context));
  out.push_back(identity_check("sur_identity", sur_identity, context));
}

}  // namespace

std::uint64_t SplitMix64::next() noexcept {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() noexcept {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

int SplitMix64::uniform_int(int lo, int hi) noexcept {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next() % span);
}

Complex SplitMix64::complex_gaussian() noexcept {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

QuantumState random_state(std::size_t dim, std::size_t rank, SplitMix64& rng) {
  if (dim == 0 || rank < 1 || rank > dim)
    throw Error(ErrorCode::kBadRank,
                "rank " + std::to_string(rank) + " outside [1, " + std::to_string(dim) + "]");
  CMatrix g(dim, rank);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < rank; ++j) g(i, j) = rng.complex_gaussian();
  CMatrix rho = g * g.adjoint();
  return validate_state(rho * (1.0 / rho.trace().real()));
}

Observable random_observable(std::size_t dim, SplitMix64& rng, std::string label) {
  CMatrix r(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) r(i, j) = rng.complex_gaussian();
  return {std::move(label), hermitian_part(r)};
}

CMatrix random_unitary(std::size_t dim, SplitMix64& rng) {
  return eigh(random_observable(dim, rng).matrix()).eigenvectors;
}

CanonicalSets random_canonical_sets(std::size_t dim, std::size_t n, SplitMix64& rng) {
  if (dim < 2) throw Error(ErrorCode::kInvalidArgument, "canonical sets need dimension >= 2");
  if (n < 1 || n > 2) throw Error(ErrorCode::kInvalidArgument, "canonical sets support n = 1 or 2");
  const CMatrix u = random_unitary(dim, rng);
  const auto embed = [&](const CMatrix& pauli) {
    CMatrix block(dim, dim);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) block(i, j) = pauli(i, j);
    return hermitian_part(u * block * u.adjoint());
  };
  const double scale_a = 0.5 + rng.uniform();
  const double scale_b = 0.5 + rng.uniform();
  const CMatrix id = CMatrix::identity(dim);
  const CMatrix a_ops[] = {embed(pauli_x()), embed(pauli_y())};
  const CMatrix b_ops[] = {embed(pauli_y()), embed(pauli_x()) * -1.0};

  CanonicalSets sets{{}, {}, Observable("C", embed(pauli_z()) * (2.0 * scale_a * scale_b))};
  for (std::size_t i = 0; i < n; ++i) {
    const double shift_a = rng.complex_gaussian().real();
    const double shift_b = rng.complex_gaussian().real();
    sets.a.emplace_back("A" + std::to_string(i + 1), a_ops[i] * scale_a + id * shift_a);
    sets.b.emplace_back("B" + std::to_string(i + 1), b_ops[i] * scale_b + id * shift_b);
  }
  return sets;
}

void TrialConfig::validate() const {
  if (trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
  if (dims.lo < 2 || dims.hi > 8 || dims.lo > dims.hi)
    throw Error(ErrorCode::kInvalidArgument, "dimension range must lie within [2, 8]");
  if (set_sizes.lo < 1 || set_sizes.hi > 6 || set_sizes.lo > set_sizes.hi)
    throw Error(ErrorCode::kInvalidArgument, "set size range must lie within [1, 6]");
  if (threads < 1) throw Error(ErrorCode::kInvalidArgument, "threads must be >= 1");
}

CheckResult CheckResult::make(std::string name, double lhs, double rhs, std::string context,
                              double tolerance) {
  const double margin = lhs - rhs;
  return {std::move(name), lhs, rhs, margin, tolerance, margin >= -tolerance, std::move(context)};
}

bool SuiteReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::map<std::string, CheckSummary> SuiteReport::by_name() const {
  std::map<std::string, CheckSummary> out;
  for (const CheckResult& c : checks) {
    CheckSummary& s = out[c.name];
    if (s.run == 0 || c.margin < s.worst_margin) {
      s.worst_margin = c.margin;
      s.worst_context = c.context;
    }
    ++s.run;
    if (c.passed) ++s.passed;
  }
  return out;
}

TrialOutcome check_scenario(const QuantumState& s, ObservableSet obs_a, ObservableSet obs_b,
                            const std::string& context) {
  TrialOutcome t;
  auto& out = t.checks;
  const std::size_t n = obs_a.size();
  const double lhs_sum = sum_of_variances(s, obs_a);
  const auto guarded = [&](const std::string& name, auto&& body) {
    try {
      body();
    } catch (const Error& e) {
      if (!is_degenerate_bound(e.code())) throw;
      t.degenerate.push_back(degenerate_note(name, e, context));
    }
  };

  if (n >= 2) {
    guarded("thm1", [&] { out.push_back(CheckResult::make("thm1", lhs_sum, bound_thm1(s, obs_a), context)); });

    const ObservableSet pair = obs_a.first(2);
    const double maccone = bound_maccone(s, pair[0], pair[1]);
    out.push_back(CheckResult::make("maccone", sum_of_variances(s, pair), maccone, context));
    guarded("cor1_chain", [&] {
      out.push_back(CheckResult::make("cor1_chain", bound_thm1(s, pair), maccone, context));
    });
    out.push_back(CheckResult::make("cor1_lambda_le_2", 2.0, build_gram(s, pair).lambda_max, context,
                                    kIdentityTolerance));

    if (n >= 3)
      out.push_back(CheckResult::make("chen_fei", lhs_sum, bound_chen_fei(s, obs_a), context));

    guarded("cor3", [&] {
      const Cor3Bounds c3 = bound_cor3(s, obs_a);
      out.push_back(CheckResult::make("cor3", lhs_sum, c3.cor3, context));
      out.push_back(CheckResult::make("cor3_ge_pairwise", c3.cor3, c3.pairwise_rur, context));
      out.push_back(CheckResult::make("pairwise_rur", lhs_sum, c3.pairwise_rur, context));
    });
  }

  const double lhs_product = product_lhs(s, obs_a, obs_b);
  guarded("thm2", [&] {
    const double thm2 = bound_thm2(s, obs_a, obs_b);
    const double cor2 = bound_cor2(s, obs_a, obs_b);
    out.push_back(CheckResult::make("thm2", lhs_product, thm2, context));
    out.push_back(CheckResult::make("thm2_ge_cor2", thm2, cor2, context));
    out.push_back(CheckResult::make("cor2", lhs_product, cor2, context));
  });
  out.push_back(CheckResult::make("c22", lhs_product, bound_c22(s, obs_a, obs_b), context));

  const PairBounds pb = pair_bounds(s, obs_a[0], obs_b[0]);
  const double da = std_dev(s, obs_a[0]);
  const double db = std_dev(s, obs_b[0]);
  out.push_back(CheckResult::make("rur", da * db, pb.rur, context));
  out.push_back(CheckResult::make("sur", da * da * db * db, pb.sur, context));

  structural_checks(s, obs_a, obs_b, context, out);
  return t;
}

CheckResult check_pati(const QuantumState& s, const CanonicalSets& sets, const std::string& context) {
  const PatiBounds p = bound_pati(s, sets.a, sets.b, sets.c);
  return CheckResult::make("pati", p.lhs, p.rhs, context);
}

namespace {

struct FixtureTrial {
  std::string context;
  QuantumState state;
  std::vector<Observable> a;
  std::vector<Observable> b;
};

std::vector<FixtureTrial> qubit_fixtures() {
  const double pi = std::numbers::pi;
  const double r1 = std::sqrt(3.0) / 2.0;
  const auto sx = named_pauli("sigma_x");
  const auto sy = named_pauli("sigma_y");
  const auto sz = named_pauli("sigma_z");
  std::vector<FixtureTrial> out;
  out.push_back({"fixture fig1 theta=pi/2",
                 state_from_bloch({r1 * std::cos(pi / 2), r1 * std::sin(pi / 2), 0.0}),
                 {sx, sz},
                 {sx, sz}});
  out.push_back({"fixture fig2 theta=pi/2", state_from_bloch({std::cos(pi / 2), 0.0, 0.0}),
                 {sx, sy, sz},
                 {sx, sy, sz}});
  out.push_back({"fixture fig3 theta=pi/4",
                 state_from_bloch({0.5 * std::cos(pi / 4), 0.5 * std::sin(pi / 4), 0.0}),
                 {sz},
                 {sx, sy}});
  return out;
}

TrialOutcome run_random_trial(const TrialConfig& cfg, std::uint64_t index) {
  SplitMix64 rng(cfg.seed ^ index);
  const auto dim = static_cast<std::size_t>(rng.uniform_int(cfg.dims.lo, cfg.dims.hi));
  const auto rank = static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(dim)));
  const auto n = static_cast<std::size_t>(rng.uniform_int(cfg.set_sizes.lo, cfg.set_sizes.hi));
  const auto m = static_cast<std::size_t>(rng.uniform_int(cfg.set_sizes.lo, cfg.set_sizes.hi));
  const QuantumState s = random_state(dim, rank, rng);
  std::vector<Observable> a;
  std::vector<Observable> b;
  for (std::size_t i = 0; i < n; ++i) a.push_back(random_observable(dim, rng, "A" + std::to_string(i + 1)));
  for (std::size_t j = 0; j < m; ++j) b.push_back(random_observable(dim, rng, "B" + std::to_string(j + 1)));
  const CanonicalSets canonical =
      random_canonical_sets(dim, static_cast<std::size_t>(rng.uniform_int(1, 2)), rng);

  const std::string context = "seed=" + std::to_string(cfg.seed) + " trial=" + std::to_string(index) +
                              " dim=" + std::to_string(dim) + " rank=" + std::to_string(rank) +
                              " n=" + std::to_string(n) + " m=" + std::to_string(m);
  TrialOutcome outcome = check_scenario(s, a, b, context);
  outcome.checks.push_back(check_pati(s, canonical, context));
  return outcome;
}

}  // namespace

SuiteReport run_suite(const TrialConfig& cfg) {
  cfg.validate();
  SuiteReport report;
  report.trials = static_cast<std::size_t>(cfg.trials);

  const auto absorb = [&](TrialOutcome&& t) {
    if (!t.degenerate.empty()) {
      ++report.skipped_degenerate;
      report.skip_log.insert(report.skip_log.end(), t.degenerate.begin(), t.degenerate.end());
    }
    std::move(t.checks.begin(), t.checks.end(), std::back_inserter(report.checks));
  };

  if (cfg.include_fixtures) {
    for (FixtureTrial& f : qubit_fixtures()) absorb(check_scenario(f.state, f.a, f.b, f.context));
    const std::vector<Observable> pa = {named_pauli("sigma_x")};
    const std::vector<Observable> pb = {named_pauli("sigma_y")};
    const CanonicalSets pauli_pair{pa, pb, Observable("C", pauli_z() * 2.0)};
    report.checks.push_back(
        check_pati(state_from_bloch({0.0, 0.0, 1.0}), pauli_pair, "fixture pati bloch=(0,0,1)"));
  }

  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(cfg.trials));
  const auto worker = [&](int offset) {
    for (std::size_t t = static_cast<std::size_t>(offset); t < outcomes.size();
         t += static_cast<std::size_t>(cfg.threads))
      outcomes[t] = run_random_trial(cfg, t);
  };
  if (cfg.threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (int k = 0; k < cfg.threads; ++k) pool.emplace_back(worker, k);
  }
  for (TrialOutcome& t : outcomes) absorb(std::move(t));
  return report;
}

std::string checks_to_csv(const SuiteReport& report) {
  std::ostringstream os;
  os << "name,lhs,rhs,margin,tolerance,passed,context\n";
  for (const CheckResult& c : report.checks)
    os << c.name << ',' << format_number(c.lhs) << ',' << format_number(c.rhs) << ','
       << format_number(c.margin) << ',' << format_number(c.tolerance) << ','
       << (c.passed ? "true" : "false") << ',' << c.context << '\n';
  return os.str();
}

std::string summary_text(const SuiteReport& report) {
  std::size_t passed = 0;
  for (const CheckResult& c : report.checks) passed += c.passed ? 1 : 0;
  std::ostringstream os;
  os << "trials: " << report.trials << "\n"
     << "checks run: " << report.checks.size() << "\n"
     << "checks passed: " << passed << "\n"
     << "trials with degenerate bounds skipped: " << report.skipped_degenerate << "\n"
     << "worst margin per check:\n";
  for (const auto& [name, s] : report.by_name())
    os << "  " << name << ": run=" << s.run << " passed=" << s.passed
       << " worst_margin=" << format_number(s.worst_margin) << " [" << s.worst_context << "]\n";
  for (const CheckResult& c : report.checks)
    if (!c.passed)
      os << "FAILED " << c.name << ": lhs=" << format_number(c.lhs) << " rhs=" << format_number(c.rhs)
         << " margin=" << format_number(c.margin) << " [" << c.context << "]\n";
  for (const std::string& note : report.skip_log) os << "skipped " << note << "\n";
  return os.str();
}

}  // namespace varbound
