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

#include "varbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace varbound {
namespace {

const Complex kI(0.0, 1.0);

void require_nonempty(ObservableSet obs, const char* which) {
  if (obs.empty()) throw Error(ErrorCode::kEmptySet, std::string(which) + " observable set is empty");
}

void require_dims(const QuantumState& s, ObservableSet obs) {
  for (const Observable& a : obs)
    if (a.dim() != s.dim())
      throw Error(ErrorCode::kDimMismatch, "observable '" + a.label() + "' has dimension " +
                                               std::to_string(a.dim()) + ", state has " +
                                               std::to_string(s.dim()));
}

// Standard deviations, with zero-variance observables reported as exactly 0.
std::vector<double> deviations(const QuantumState& s, ObservableSet obs) {
  std::vector<double> out;
  out.reserve(obs.size());
  for (const Observable& a : obs) {
    const double var = variance(s, a);
    out.push_back(var <= kZeroVariance ? 0.0 : std::sqrt(var));
  }
  return out;
}

double sur_value(const QuantumState& s, const PairMoments& pm, const Observable& a,
                 const Observable& b) {
  const double commutator_part = std::norm(pm.comm_mean / (2.0 * kI));
  const double anticommutator_part =
      std::norm(pm.anticomm_mean / 2.0 - expectation(s, a) * expectation(s, b));
  return commutator_part + anticommutator_part;
}

double commutator_sum_upper(const QuantumState& s, ObservableSet obs) {
  double sum = 0.0;
  for (std::size_t i = 0; i < obs.size(); ++i)
    for (std::size_t j = i + 1; j < obs.size(); ++j)
      sum += std::abs(pair_moments(s, obs[i], obs[j]).comm_mean);
  return sum;
}

double require_sigma(const OverlapMatrix& g) {
  if (g.sigma_max <= kDegenerateDenominator)
    throw Error(ErrorCode::kAllCovariancesVanish,
                "sigma_max(G) = " + std::to_string(g.sigma_max) + "; every <~A_i ~B_j> vanishes");
  return g.sigma_max;
}

template <typename F>
BoundValue attempt(F&& f) {
  try {
    return BoundValue::of(f());
  } catch (const Error& e) {
    return BoundValue::absent(std::string(error_name(e.code())));
  }
}

}  // namespace

double sum_of_variances(const QuantumState& s, ObservableSet obs) {
  require_dims(s, obs);
  double sum = 0.0;
  for (const Observable& a : obs) sum += variance(s, a);
  return sum;
}

double product_lhs(const QuantumState& s, ObservableSet obs_a, ObservableSet obs_b) {
  return std::sqrt(sum_of_variances(s, obs_a)) * std::sqrt(sum_of_variances(s, obs_b));
}

GramMatrix build_gram(const QuantumState& s, ObservableSet obs) {
  require_nonempty(obs, "the");
  require_dims(s, obs);
  const std::size_t n = obs.size();
  GramMatrix gram{CMatrix(n, n), 0.0, deviations(s, obs)};
  for (std::size_t i = 0; i < n; ++i) {
    if (gram.deltas[i] == 0.0) continue;
    for (std::size_t j = i; j < n; ++j) {
      if (gram.deltas[j] == 0.0) continue;
      const Complex cov = pair_moments(s, obs[i], obs[j]).covariance;
      const Complex entry = cov / (gram.deltas[i] * gram.deltas[j]);
      if (i == j) {
        gram.m_matrix(i, i) = entry.real();
      } else {
        gram.m_matrix(i, j) = entry;
        gram.m_matrix(j, i) = std::conj(entry);
      }
    }
  }
  gram.lambda_max = max_eigenvalue(gram.m_matrix);
  return gram;
}

OverlapMatrix build_overlap(const QuantumState& s, ObservableSet obs_a, ObservableSet obs_b) {
  require_nonempty(obs_a, "first");
  require_nonempty(obs_b, "second");
  require_dims(s, obs_a);
  require_dims(s, obs_b);
  OverlapMatrix g{std::vector<double>(obs_a.size() * obs_b.size(), 0.0),
                  obs_a.size(),
                  obs_b.size(),
                  0.0,
                  deviations(s, obs_a),
                  deviations(s, obs_b)};
  CMatrix as_complex(g.n, g.m);
  for (std::size_t i = 0; i < g.n; ++i) {
    if (g.deltas_a[i] == 0.0) continue;
    for (std::size_t j = 0; j < g.m; ++j) {
      if (g.deltas_b[j] == 0.0) continue;
      const double entry = std::abs(pair_moments(s, obs_a[i], obs_b[j]).covariance) /
                           (g.deltas_a[i] * g.deltas_b[j]);
      g.g_matrix[i * g.m + j] = entry;
      as_complex(i, j) = entry;
    }
  }
  g.sigma_max = singular_values(as_complex).front();
  return g;
}

double bound_thm1(const QuantumState& s, ObservableSet obs) {
  require_nonempty(obs, "the");
  if (obs.size() < 2) throw Error(ErrorCode::kNeedAtLeastTwo, "need at least two observables");
  const GramMatrix gram = build_gram(s, obs);
  if (gram.lambda_max <= kDegenerateDenominator)
    throw Error(ErrorCode::kAllCompatible,
                "lambda_max(M) = " + std::to_string(gram.lambda_max) + "; every variance vanishes");
  return variance(s, sum_of(obs)) / gram.lambda_max;
}

double bound_maccone(const QuantumState& s, const Observable& a, const Observable& b) {
  const Observable pair[] = {a, b};
  require_dims(s, pair);
  return variance(s, sum_of(pair)) / 2.0;
}

double bound_chen_fei(const QuantumState& s, ObservableSet obs) {
  require_nonempty(obs, "the");
  require_dims(s, obs);
  const std::size_t n = obs.size();
  if (n < 3) throw Error(ErrorCode::kNeedAtLeastThree, "the bound has a 1/(n-2) prefactor");
  double sum_var = 0.0;
  double sum_dev = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Observable pair[] = {obs[i], obs[j]};
      const double var = variance(s, sum_of(pair));
      sum_var += var;
      sum_dev += std::sqrt(var);
    }
  const double nm1 = static_cast<double>(n - 1);
  return (sum_var - sum_dev * sum_dev / (nm1 * nm1)) / static_cast<double>(n - 2);
}

PairBounds pair_bounds(const QuantumState& s, const Observable& a, const Observable& b) {
  const PairMoments pm = pair_moments(s, a, b);
  return {std::abs(pm.comm_mean) / 2.0, sur_value(s, pm, a, b)};
}

double bound_thm2(const QuantumState& s, ObservableSet obs_a, ObservableSet obs_b) {
  const double sigma = require_sigma(build_overlap(s, obs_a, obs_b));
  double sum = 0.0;
  for (const Observable& a : obs_a)
    for (const Observable& b : obs_b) sum += std::sqrt(sur_value(s, pair_moments(s, a, b), a, b));
  return sum / sigma;
}

double bound_cor2(const QuantumState& s, ObservableSet obs_a, ObservableSet obs_b) {
  const double sigma = require_sigma(build_overlap(s, obs_a, obs_b));
  double sum = 0.0;
  for (const Observable& a : obs_a)
    for (const Observable& b : obs_b) sum += std::abs(pair_moments(s, a, b).comm_mean);
  return sum / (2.0 * sigma);
}

double bound_c22(const QuantumState& s, ObservableSet obs_a, ObservableSet obs_b) {
  require_dims(s, obs_a);
  require_dims(s, obs_b);
  double sum = 0.0;
  for (const Observable& a : obs_a)
    for (const Observable& b : obs_b) sum += std::norm(pair_moments(s, a, b).comm_mean);
  return std::sqrt(sum) / 2.0;
}

Cor3Bounds bound_cor3(const QuantumState& s, ObservableSet obs) {
  require_nonempty(obs, "the");
  if (obs.size() < 2) throw Error(ErrorCode::kNeedAtLeastTwo, "need at least two observables");
  const double nm1 = static_cast<double>(obs.size() - 1);
  const double sum = commutator_sum_upper(s, obs);
  const double denom = std::min(build_overlap(s, obs, obs).sigma_max, nm1);
  if (denom <= kDegenerateDenominator) {
    if (sum <= kDegenerateDenominator) return {0.0, sum / nm1};
    throw Error(ErrorCode::kAllCovariancesVanish, "sigma_max(G) vanishes with nonzero commutators");
  }
  return {sum / denom, sum / nm1};
}

PatiBounds bound_pati(const QuantumState& s, ObservableSet obs_a, ObservableSet obs_b,
                      const Observable& c) {
  require_nonempty(obs_a, "first");
  if (obs_a.size() != obs_b.size())
    throw Error(ErrorCode::kCommutatorStructureViolated,
                "canonical sets need equal sizes, got " + std::to_string(obs_a.size()) + " and " +
                    std::to_string(obs_b.size()));
  require_dims(s, obs_a);
  require_dims(s, obs_b);
  const Observable single[] = {c};
  require_dims(s, single);
  const CMatrix ic = kI * c.matrix();
  for (std::size_t i = 0; i < obs_a.size(); ++i)
    for (std::size_t j = 0; j < obs_b.size(); ++j) {
      CMatrix defect = commutator(obs_a[i].matrix(), obs_b[j].matrix());
      if (i == j) defect -= ic;
      const double err = defect.frobenius_norm();
      if (err > kCommutatorTolerance)
        throw Error(ErrorCode::kCommutatorStructureViolated,
                    "||[A_" + std::to_string(i) + ", B_" + std::to_string(j) + "] - i delta C||_F = " +
                        std::to_string(err));
    }
  double sum_a = 0.0;
  double sum_b = 0.0;
  for (const Observable& a : obs_a) sum_a += std_dev(s, a);
  for (const Observable& b : obs_b) sum_b += std_dev(s, b);
  const double n = static_cast<double>(obs_a.size());
  return {sum_a * sum_b, n / 2.0 * std::abs(expectation(s, c))};
}

SumBoundReport sum_report(const QuantumState& s, ObservableSet obs) {
  const GramMatrix gram = build_gram(s, obs);
  const OverlapMatrix overlap = build_overlap(s, obs, obs);
  const std::size_t n = obs.size();
  SumBoundReport r{sum_of_variances(s, obs),
                   attempt([&] { return bound_thm1(s, obs); }),
                   BoundValue::absent("NeedExactlyTwo"),
                   BoundValue::absent("NeedAtLeastThree"),
                   BoundValue::absent("NeedAtLeastTwo"),
                   BoundValue::absent("NeedAtLeastTwo"),
                   gram.lambda_max,
                   overlap.sigma_max};
  if (n == 2) r.maccone = attempt([&] { return bound_maccone(s, obs[0], obs[1]); });
  if (n >= 3) r.chen_fei = attempt([&] { return bound_chen_fei(s, obs); });
  if (n >= 2) {
    try {
      const Cor3Bounds c = bound_cor3(s, obs);
      r.cor3 = BoundValue::of(c.cor3);
      r.pairwise_rur = BoundValue::of(c.pairwise_rur);
    } catch (const Error& e) {
      r.cor3 = BoundValue::absent(std::string(error_name(e.code())));
      r.pairwise_rur = BoundValue::of(commutator_sum_upper(s, obs) / static_cast<double>(n - 1));
    }
  }
  return r;
}

ProductBoundReport product_report(const QuantumState& s, ObservableSet obs_a, ObservableSet obs_b) {
  const OverlapMatrix overlap = build_overlap(s, obs_a, obs_b);
  return {product_lhs(s, obs_a, obs_b), attempt([&] { return bound_thm2(s, obs_a, obs_b); }),
          attempt([&] { return bound_cor2(s, obs_a, obs_b); }), bound_c22(s, obs_a, obs_b),
          overlap.sigma_max};
}

}  // namespace varbound
