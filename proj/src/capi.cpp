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

#include "varbound/varbound.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iterator>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "varbound/bounds.hpp"
#include "varbound/scenario.hpp"
#include "varbound/verify.hpp"

struct vb_state {
  varbound::QuantumState state;
};

struct vb_observable {
  varbound::Observable obs;
};

struct vb_observable_set {
  std::vector<varbound::Observable> items;
};

namespace {

using varbound::Error;
using varbound::ErrorCode;

thread_local std::string g_last_error;

vb_status fail_with(vb_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename F>
vb_status guard(F&& f) noexcept {
  try {
    return f();
  } catch (const Error& e) {
    return fail_with(static_cast<vb_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail_with(VB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail_with(VB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail_with(VB_ERR_INTERNAL, "unknown exception");
  }
}

#define VB_REQUIRE(ptr)                                                         \
  do {                                                                          \
    if ((ptr) == nullptr) return fail_with(VB_ERR_NULL_ARGUMENT, #ptr " is NULL"); \
  } while (0)

varbound::CMatrix matrix_from(size_t dim, const double* re_im) {
  std::vector<varbound::Complex> entries(dim * dim);
  for (size_t k = 0; k < entries.size(); ++k) entries[k] = {re_im[2 * k], re_im[2 * k + 1]};
  return {dim, dim, std::move(entries)};
}

std::string read_file(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, std::string("cannot open '") + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const char* path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, std::string("cannot write '") + path + "'");
  out << content;
  if (!out) throw Error(ErrorCode::kIoError, std::string("write to '") + path + "' failed");
}

}  // namespace

extern "C" {

const char* vb_status_name(vb_status status) {
  switch (status) {
    case VB_OK: return "OK";
    case VB_ERR_DEGENERATE_BOUND: return "DegenerateBound";
    case VB_ERR_VERIFICATION_FAILED: return "VerificationFailed";
    case VB_ERR_NULL_ARGUMENT: return "NullArgument";
    case VB_ERR_INTERNAL: return "Internal";
    default: break;
  }
  const auto code = static_cast<ErrorCode>(status);
  // error_name returns views of string literals.
  return varbound::error_name(code).data();
}

const char* vb_last_error(void) { return g_last_error.c_str(); }

const char* vb_version(void) { return "1.0.0"; }

vb_status vb_state_from_bloch(double x, double y, double z, vb_state** out) {
  VB_REQUIRE(out);
  return guard([&] {
    *out = new vb_state{varbound::state_from_bloch({x, y, z})};
    return VB_OK;
  });
}

vb_status vb_state_from_matrix(size_t dim, const double* re_im, vb_state** out) {
  VB_REQUIRE(re_im);
  VB_REQUIRE(out);
  return guard([&] {
    *out = new vb_state{varbound::validate_state(matrix_from(dim, re_im))};
    return VB_OK;
  });
}

void vb_state_destroy(vb_state* state) { delete state; }

size_t vb_state_dim(const vb_state* state) { return state ? state->state.dim() : 0; }

vb_status vb_state_rho(const vb_state* state, double* re_im_out) {
  VB_REQUIRE(state);
  VB_REQUIRE(re_im_out);
  const auto entries = state->state.rho().entries();
  for (size_t k = 0; k < entries.size(); ++k) {
    re_im_out[2 * k] = entries[k].real();
    re_im_out[2 * k + 1] = entries[k].imag();
  }
  return VB_OK;
}

vb_status vb_observable_pauli(const char* name, vb_observable** out) {
  VB_REQUIRE(name);
  VB_REQUIRE(out);
  return guard([&] {
    *out = new vb_observable{varbound::named_pauli(name)};
    return VB_OK;
  });
}

vb_status vb_observable_from_matrix(const char* label, size_t dim, const double* re_im,
                                    vb_observable** out) {
  VB_REQUIRE(re_im);
  VB_REQUIRE(out);
  return guard([&] {
    *out = new vb_observable{varbound::Observable(label ? label : "O", matrix_from(dim, re_im))};
    return VB_OK;
  });
}

void vb_observable_destroy(vb_observable* obs) { delete obs; }

size_t vb_observable_dim(const vb_observable* obs) { return obs ? obs->obs.dim() : 0; }

vb_status vb_observable_set_create(vb_observable_set** out) {
  VB_REQUIRE(out);
  return guard([&] {
    *out = new vb_observable_set{};
    return VB_OK;
  });
}

vb_status vb_observable_set_push(vb_observable_set* set, const vb_observable* obs) {
  VB_REQUIRE(set);
  VB_REQUIRE(obs);
  return guard([&] {
    set->items.push_back(obs->obs);
    return VB_OK;
  });
}

size_t vb_observable_set_size(const vb_observable_set* set) { return set ? set->items.size() : 0; }

void vb_observable_set_destroy(vb_observable_set* set) { delete set; }

vb_status vb_expectation(const vb_state* s, const vb_observable* a, double* out) {
  VB_REQUIRE(s);
  VB_REQUIRE(a);
  VB_REQUIRE(out);
  return guard([&] {
    *out = varbound::expectation(s->state, a->obs);
    return VB_OK;
  });
}

vb_status vb_variance(const vb_state* s, const vb_observable* a, double* out) {
  VB_REQUIRE(s);
  VB_REQUIRE(a);
  VB_REQUIRE(out);
  return guard([&] {
    *out = varbound::variance(s->state, a->obs);
    return VB_OK;
  });
}

vb_status vb_lambda_max(const vb_state* s, const vb_observable_set* obs, double* out) {
  VB_REQUIRE(s);
  VB_REQUIRE(obs);
  VB_REQUIRE(out);
  return guard([&] {
    *out = varbound::build_gram(s->state, obs->items).lambda_max;
    return VB_OK;
  });
}

vb_status vb_sigma_max(const vb_state* s, const vb_observable_set* a, const vb_observable_set* b,
                       double* out) {
  VB_REQUIRE(s);
  VB_REQUIRE(a);
  VB_REQUIRE(b);
  VB_REQUIRE(out);
  return guard([&] {
    *out = varbound::build_overlap(s->state, a->items, b->items).sigma_max;
    return VB_OK;
  });
}

vb_status vb_sum_of_variances(const vb_state* s, const vb_observable_set* obs, double* out) {
  VB_REQUIRE(s);
  VB_REQUIRE(obs);
  VB_REQUIRE(out);
  return guard([&] {
    *out = varbound::sum_of_variances(s->state, obs->items);
    return VB_OK;
  });
}

vb_status vb_product_lhs(const vb_state* s, const vb_observable_set* a, const vb_observable_set* b,
                         double* out) {
  VB_REQUIRE(s);
  VB_REQUIRE(a);
  VB_REQUIRE(b);
  VB_REQUIRE(out);
  return guard([&] {
    *out = varbound::product_lhs(s->state, a->items, b->items);
    return VB_OK;
  });
}

vb_status vb_bound_thm1(const vb_state* s, const vb_observable_set* obs, double* out) {
  VB_REQUIRE(s);
  VB_REQUIRE(obs);
  VB_REQUIRE(out);
  return guard([&] {
    *out = varbound::bound_thm1(s->state, obs->items);
    return VB_OK;
  });
}

vb_status vb_bound_maccone(const vb_state* s, const vb_observable* a, const vb_observable* b,
                           double* out) {
  VB_REQUIRE(s);
  VB_REQUIRE(a);
  VB_REQUIRE(b);
  VB_REQUIRE(out);
  return guard([&] {
    *out = varbound::bound_maccone(s->state, a->obs, b->obs);
    return VB_OK;
  });
}

vb_status vb_bound_chen_fei(const vb_state* s, const vb_observable_set* obs, double* out) {
  VB_REQUIRE(s);
  VB_REQUIRE(obs);
  VB_REQUIRE(out);
  return guard([&] {
    *out = varbound::bound_chen_fei(s->state, obs->items);
    return VB_OK;
  });
}

vb_status vb_pair_bounds(const vb_state* s, const vb_observable* a, const vb_observable* b,
                         double* rur, double* sur) {
  VB_REQUIRE(s);
  VB_REQUIRE(a);
  VB_REQUIRE(b);
  VB_REQUIRE(rur);
  VB_REQUIRE(sur);
  return guard([&] {
    const varbound::PairBounds pb = varbound::pair_bounds(s->state, a->obs, b->obs);
    *rur = pb.rur;
    *sur = pb.sur;
    return VB_OK;
  });
}

vb_status vb_bound_thm2(const vb_state* s, const vb_observable_set* a, const vb_observable_set* b,
                        double* out) {
  VB_REQUIRE(s);
  VB_REQUIRE(a);
  VB_REQUIRE(b);
  VB_REQUIRE(out);
  return guard([&] {
    *out = varbound::bound_thm2(s->state, a->items, b->items);
    return VB_OK;
  });
}

vb_status vb_bound_cor2(const vb_state* s, const vb_observable_set* a, const vb_observable_set* b,
                        double* out) {
  VB_REQUIRE(s);
  VB_REQUIRE(a);
  VB_REQUIRE(b);
  VB_REQUIRE(out);
  return guard([&] {
    *out = varbound::bound_cor2(s->state, a->items, b->items);
    return VB_OK;
  });
}

vb_status vb_bound_c22(const vb_state* s, const vb_observable_set* a, const vb_observable_set* b,
                       double* out) {
  VB_REQUIRE(s);
  VB_REQUIRE(a);
  VB_REQUIRE(b);
  VB_REQUIRE(out);
  return guard([&] {
    *out = varbound::bound_c22(s->state, a->items, b->items);
    return VB_OK;
  });
}

vb_status vb_bound_cor3(const vb_state* s, const vb_observable_set* obs, double* cor3,
                        double* pairwise_rur) {
  VB_REQUIRE(s);
  VB_REQUIRE(obs);
  VB_REQUIRE(cor3);
  VB_REQUIRE(pairwise_rur);
  return guard([&] {
    const varbound::Cor3Bounds c = varbound::bound_cor3(s->state, obs->items);
    *cor3 = c.cor3;
    *pairwise_rur = c.pairwise_rur;
    return VB_OK;
  });
}

vb_status vb_bound_pati(const vb_state* s, const vb_observable_set* a, const vb_observable_set* b,
                        const vb_observable* c, double* lhs, double* rhs) {
  VB_REQUIRE(s);
  VB_REQUIRE(a);
  VB_REQUIRE(b);
  VB_REQUIRE(c);
  VB_REQUIRE(lhs);
  VB_REQUIRE(rhs);
  return guard([&] {
    const varbound::PatiBounds p = varbound::bound_pati(s->state, a->items, b->items, c->obs);
    *lhs = p.lhs;
    *rhs = p.rhs;
    return VB_OK;
  });
}

vb_status vb_eval_file(const char* scenario_path, const char* out_path) {
  VB_REQUIRE(scenario_path);
  VB_REQUIRE(out_path);
  return guard([&] {
    const varbound::Scenario sc = varbound::parse_scenario(read_file(scenario_path));
    const varbound::EvalResult r = varbound::evaluate(sc);
    write_file(out_path, r.report_json);
    if (r.degenerate.empty()) return VB_OK;
    std::string msg = "degenerate bounds:";
    for (const std::string& d : r.degenerate) msg += " " + d + ";";
    msg.pop_back();
    return fail_with(VB_ERR_DEGENERATE_BOUND, msg);
  });
}

vb_status vb_sweep_file(const char* spec_path, const char* out_path) {
  VB_REQUIRE(spec_path);
  VB_REQUIRE(out_path);
  return guard([&] {
    const varbound::SweepSpec spec = varbound::parse_sweep_spec(read_file(spec_path));
    write_file(out_path, varbound::to_csv(varbound::run_sweep(spec)));
    return VB_OK;
  });
}

vb_status vb_figure_file(const char* id, int points, const char* out_path) {
  VB_REQUIRE(id);
  VB_REQUIRE(out_path);
  return guard([&] {
    const varbound::SweepSpec spec = varbound::figure_spec(id, points);
    write_file(out_path, varbound::to_csv(varbound::run_sweep(spec)));
    return VB_OK;
  });
}

void vb_verify_options_init(vb_verify_options* opts) {
  if (!opts) return;
  const varbound::TrialConfig defaults;
  opts->seed = defaults.seed;
  opts->trials = defaults.trials;
  opts->dim_min = defaults.dims.lo;
  opts->dim_max = defaults.dims.hi;
  opts->set_min = defaults.set_sizes.lo;
  opts->set_max = defaults.set_sizes.hi;
  opts->threads = defaults.threads;
}

vb_status vb_run_verify(const vb_verify_options* opts, const char* out_path, char** summary) {
  VB_REQUIRE(opts);
  return guard([&] {
    varbound::TrialConfig cfg;
    cfg.seed = opts->seed;
    cfg.trials = opts->trials;
    cfg.dims = {opts->dim_min, opts->dim_max};
    cfg.set_sizes = {opts->set_min, opts->set_max};
    cfg.threads = opts->threads;
    const varbound::SuiteReport report = varbound::run_suite(cfg);
    if (out_path) write_file(out_path, varbound::checks_to_csv(report));
    if (summary) {
      const std::string text = varbound::summary_text(report);
      *summary = static_cast<char*>(std::malloc(text.size() + 1));
      if (!*summary) throw std::bad_alloc();
      std::memcpy(*summary, text.c_str(), text.size() + 1);
    }
    if (report.all_passed()) return VB_OK;
    return fail_with(VB_ERR_VERIFICATION_FAILED, "one or more checks failed");
  });
}

void vb_string_free(char* s) { std::free(s); }

}  // extern "C"
