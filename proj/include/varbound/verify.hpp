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

// Seeded random ensembles and the randomized inequality suite.

#ifndef VARBOUND_VERIFY_HPP
#define VARBOUND_VERIFY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "varbound/bounds.hpp"

namespace varbound {

// SplitMix64 (Steele, Lea & Flood 2014). The state is a Weyl counter that
// advances by the golden-ratio increment 0x9E3779B97F4A7C15; each output is
// the counter passed through a fixed 64-bit finalizer, so the k-th draw of a
// stream depends only on (seed, k). Per-trial streams are seeded with
// seed ^ trial_index.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept;
  // Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept;
  // Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi) noexcept;
  // Complex number with independent N(0, 1) real and imaginary parts, from
  // one Box-Muller pair.
  Complex complex_gaussian() noexcept;

 private:
  std::uint64_t state_;
};

// G G^dagger / Tr(G G^dagger) for a dim x rank complex Gaussian G.
QuantumState random_state(std::size_t dim, std::size_t rank, SplitMix64& rng);
// (R + R^dagger) / 2 for a complex Gaussian R.
Observable random_observable(std::size_t dim, SplitMix64& rng, std::string label = "R");
// Eigenvector matrix of a random Hermitian matrix.
CMatrix random_unitary(std::size_t dim, SplitMix64& rng);

// Sets {A_i}, {B_i} and C with [A_i, B_j] = i delta_ij C, built from
// {sigma_x, sigma_y}, {sigma_y, -sigma_x}, 2 sigma_z embedded in a random
// two-dimensional subspace, rescaled and shifted by multiples of identity.
struct CanonicalSets {
  std::vector<Observable> a;
  std::vector<Observable> b;
  Observable c;
};
CanonicalSets random_canonical_sets(std::size_t dim, std::size_t n, SplitMix64& rng);

struct IntRange {
  int lo;
  int hi;
};

struct TrialConfig {
  std::uint64_t seed = 42;
  int trials = 1000;
  IntRange dims{2, 4};
  IntRange set_sizes{2, 4};
  // Prepend the closed-form qubit fixtures as extra trials.
  bool include_fixtures = true;
  // Worker threads; results do not depend on this.
  int threads = 1;

  // Throws InvalidArgument unless trials >= 1, dims within [2, 8] and set
  // sizes within [1, 6].
  void validate() const;
};

inline constexpr double kInequalitySlack = 1e-9;

struct CheckResult {
  std::string name;
  double lhs;
  double rhs;
  double margin;     // lhs - rhs
  double tolerance;  // passed iff margin >= -tolerance
  bool passed;
  std::string context;

  static CheckResult make(std::string name, double lhs, double rhs, std::string context,
                          double tolerance = kInequalitySlack);
};

struct CheckSummary {
  std::size_t run = 0;
  std::size_t passed = 0;
  double worst_margin = 0.0;
  std::string worst_context;
};

struct SuiteReport {
  std::vector<CheckResult> checks;  // ordered by trial, then check
  std::size_t trials = 0;
  std::size_t skipped_degenerate = 0;
  std::vector<std::string> skip_log;

  bool all_passed() const;
  std::map<std::string, CheckSummary> by_name() const;
};

// Every inequality and structural identity the bounds obey, evaluated on one
// state with sets A and B. Degenerate bounds are left out and named in
// `degenerate`.
struct TrialOutcome {
  std::vector<CheckResult> checks;
  std::vector<std::string> degenerate;
};
TrialOutcome check_scenario(const QuantumState& s, ObservableSet obs_a, ObservableSet obs_b,
                            const std::string& context);
CheckResult check_pati(const QuantumState& s, const CanonicalSets& sets, const std::string& context);

SuiteReport run_suite(const TrialConfig& cfg);

// One row per check: name,lhs,rhs,margin,tolerance,passed,context
std::string checks_to_csv(const SuiteReport& report);
std::string summary_text(const SuiteReport& report);

}  // namespace varbound

#endif  // VARBOUND_VERIFY_HPP
