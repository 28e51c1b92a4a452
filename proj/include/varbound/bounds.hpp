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

// Variance-based uncertainty bounds for finite sets of observables.
//
// Sum-form bounds lower-bound sum_i (Delta A_i)^2:
//   gram       [Delta(sum_i A_i)]^2 / lambda_max(M)
//   maccone    [Delta(A + B)]^2 / 2                              (two observables)
//   chen_fei   pairwise-sum bound with the 1/(n-2) prefactor      (n >= 3)
//   cor3       sum_{i<j} |<[A_i, A_j]>| / min(sigma_max(G), n - 1)
//   pairwise   sum_{i<j} |<[A_i, A_j]>| / (n - 1)
//
// Product-form bounds lower-bound sqrt(sum_i (Delta A_i)^2) sqrt(sum_j (Delta B_j)^2):
//   thm2       sum_ij sqrt(SUR_ij) / sigma_max(G)
//   cor2       sum_ij |<[A_i, B_j]>| / (2 sigma_max(G))
//   c22        sqrt(sum_ij |<[A_i, B_j]>|^2) / 2
//
// M_ij = <~A_i ~A_j> / (Delta A_i Delta A_j) is the Gram matrix of the
// normalized deviations (A_i - <A_i>) sqrt(rho) / Delta A_i, and
// G_ij = |<~A_i ~B_j>| / (Delta A_i Delta B_j) its entrywise-modulus analogue
// between two sets. Both carry zero rows/columns for zero-variance
// observables.

#ifndef VARBOUND_BOUNDS_HPP
#define VARBOUND_BOUNDS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "varbound/quantum.hpp"

namespace varbound {

// Denominators (lambda_max, sigma_max) at or below this are degenerate.
inline constexpr double kDegenerateDenominator = 1e-12;
// Frobenius tolerance on [A_i, B_j] - i delta_ij C for canonical sets.
inline constexpr double kCommutatorTolerance = 1e-8;

struct GramMatrix {
  CMatrix m_matrix;
  double lambda_max;
  std::vector<double> deltas;  // Delta A_i

  std::size_t n() const noexcept { return deltas.size(); }
};

struct OverlapMatrix {
  std::vector<double> g_matrix;  // row-major n x m, entries in [0, 1]
  std::size_t n;
  std::size_t m;
  double sigma_max;
  std::vector<double> deltas_a;
  std::vector<double> deltas_b;

  double operator()(std::size_t i, std::size_t j) const { return g_matrix[i * m + j]; }
};

// A bound value, or the name of the error that made it unavailable.
struct BoundValue {
  std::optional<double> value;
  std::string reason;

  static BoundValue of(double v) { return {v, {}}; }
  static BoundValue absent(std::string why) { return {std::nullopt, std::move(why)}; }
  bool present() const noexcept { return value.has_value(); }
};

struct SumBoundReport {
  double lhs;  // sum_i (Delta A_i)^2
  BoundValue thm1;
  BoundValue maccone;   // n == 2 only
  BoundValue chen_fei;  // n >= 3 only
  BoundValue cor3;
  BoundValue pairwise_rur;
  double lambda_max;
  double sigma_max;  // of G built with both sets equal to obs
};

struct ProductBoundReport {
  double lhs;  // sqrt(sum_i (Delta A_i)^2) * sqrt(sum_j (Delta B_j)^2)
  BoundValue thm2;
  BoundValue cor2;
  double c22;
  double sigma_max;
};

struct PairBounds {
  double rur;  // |<[A, B]>| / 2, bounds Delta A Delta B
  double sur;  // bounds (Delta A)^2 (Delta B)^2
};

struct Cor3Bounds {
  double cor3;
  double pairwise_rur;
};

struct PatiBounds {
  double lhs;  // (sum_i Delta A_i)(sum_i Delta B_i)
  double rhs;  // (n / 2) |<C>|
};

using ObservableSet = std::span<const Observable>;

double sum_of_variances(const QuantumState& s, ObservableSet obs);
double product_lhs(const QuantumState& s, ObservableSet obs_a, ObservableSet obs_b);

GramMatrix build_gram(const QuantumState& s, ObservableSet obs);
OverlapMatrix build_overlap(const QuantumState& s, ObservableSet obs_a, ObservableSet obs_b);

double bound_thm1(const QuantumState& s, ObservableSet obs);
double bound_maccone(const QuantumState& s, const Observable& a, const Observable& b);
double bound_chen_fei(const QuantumState& s, ObservableSet obs);
PairBounds pair_bounds(const QuantumState& s, const Observable& a, const Observable& b);

double bound_thm2(const QuantumState& s, ObservableSet obs_a, ObservableSet obs_b);
double bound_cor2(const QuantumState& s, ObservableSet obs_a, ObservableSet obs_b);
double bound_c22(const QuantumState& s, ObservableSet obs_a, ObservableSet obs_b);
Cor3Bounds bound_cor3(const QuantumState& s, ObservableSet obs);
PatiBounds bound_pati(const QuantumState& s, ObservableSet obs_a, ObservableSet obs_b,
                      const Observable& c);

// Evaluate every applicable bound; unavailable or degenerate ones carry the
// error name instead of a value.
SumBoundReport sum_report(const QuantumState& s, ObservableSet obs);
ProductBoundReport product_report(const QuantumState& s, ObservableSet obs_a, ObservableSet obs_b);

}  // namespace varbound

#endif  // VARBOUND_BOUNDS_HPP
