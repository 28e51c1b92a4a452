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

#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"

namespace varbound {
namespace {

using namespace testing;

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{};
}

TEST(SplitMix64, KnownSequence) {
  // Reference outputs of the published SplitMix64 for seed 0.
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(rng.next(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(rng.next(), 0x06c45d188009454fULL);
}

TEST(SplitMix64, UniformRanges) {
  SplitMix64 rng(7);
  std::set<int> seen;
  for (int i = 0; i < 2000; ++i) {
    const double u = rng.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    const int k = rng.uniform_int(2, 4);
    EXPECT_GE(k, 2);
    EXPECT_LE(k, 4);
    seen.insert(k);
  }
  EXPECT_EQ(seen.size(), 3u);
}

TEST(SplitMix64, GaussianMoments) {
  SplitMix64 rng(11);
  const int count = 200000;
  double mean = 0.0;
  double second = 0.0;
  for (int i = 0; i < count; ++i) {
    const Complex z = rng.complex_gaussian();
    mean += z.real() + z.imag();
    second += std::norm(z);
  }
  EXPECT_NEAR(mean / (2.0 * count), 0.0, 0.01);
  EXPECT_NEAR(second / count, 2.0, 0.02);
}

TEST(RandomState, ValidWithRequestedRank) {
  SplitMix64 rng(3);
  for (std::size_t dim = 2; dim <= 6; ++dim) {
    for (std::size_t rank = 1; rank <= dim; ++rank) {
      const QuantumState s = random_state(dim, rank, rng);
      EXPECT_EQ(s.dim(), dim);
      EXPECT_NEAR(s.rho().trace().real(), 1.0, 1e-12);
      const HermEigen e = eigh(s.rho());
      std::size_t nonzero = 0;
      for (double v : e.eigenvalues) {
        EXPECT_GE(v, -1e-12);
        if (v > 1e-10) ++nonzero;
      }
      EXPECT_EQ(nonzero, rank);
      if (rank == 1) EXPECT_NEAR(s.purity(), 1.0, 1e-12);
    }
  }
  EXPECT_EQ(code_of([&] { random_state(3, 0, rng); }), ErrorCode::kBadRank);
  EXPECT_EQ(code_of([&] { random_state(3, 4, rng); }), ErrorCode::kBadRank);
}

TEST(RandomGenerators, Deterministic) {
  SplitMix64 a(99);
  SplitMix64 b(99);
  EXPECT_EQ(random_state(4, 2, a).rho(), random_state(4, 2, b).rho());
  EXPECT_EQ(random_observable(3, a).matrix(), random_observable(3, b).matrix());
  EXPECT_EQ(random_unitary(3, a), random_unitary(3, b));
}

TEST(RandomGenerators, ObservableHermitianUnitaryUnitary) {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto dim = static_cast<std::size_t>(rng.uniform_int(2, 8));
    const CMatrix h = random_observable(dim, rng).matrix();
    EXPECT_EQ(hermiticity_defect(h), 0.0);
    const CMatrix u = random_unitary(dim, rng);
    EXPECT_LE(max_abs_diff(u * u.adjoint(), CMatrix::identity(dim)), 1e-12);
  }
}

TEST(CanonicalSets, CommutatorStructure) {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const auto dim = static_cast<std::size_t>(rng.uniform_int(2, 6));
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, 2));
    const CanonicalSets sets = random_canonical_sets(dim, n, rng);
    ASSERT_EQ(sets.a.size(), n);
    ASSERT_EQ(sets.b.size(), n);
    const CMatrix ic = sets.c.matrix() * Complex(0.0, 1.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const CMatrix comm = commutator(sets.a[i].matrix(), sets.b[j].matrix());
        const CMatrix expected = i == j ? ic : CMatrix(dim, dim);
        EXPECT_LE(max_abs_diff(comm, expected), 1e-10);
      }
  }
  EXPECT_EQ(code_of([&] { random_canonical_sets(2, 3, rng); }), ErrorCode::kInvalidArgument);
}

TEST(TrialConfig, Validation) {
  TrialConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.trials = 0;
  EXPECT_EQ(code_of([&] { cfg.validate(); }), ErrorCode::kInvalidArgument);
  cfg = TrialConfig{};
  cfg.dims = {1, 4};
  EXPECT_EQ(code_of([&] { cfg.validate(); }), ErrorCode::kInvalidArgument);
  cfg.dims = {4, 2};
  EXPECT_EQ(code_of([&] { cfg.validate(); }), ErrorCode::kInvalidArgument);
  cfg = TrialConfig{};
  cfg.set_sizes = {1, 7};
  EXPECT_EQ(code_of([&] { cfg.validate(); }), ErrorCode::kInvalidArgument);
  cfg = TrialConfig{};
  cfg.threads = 0;
  EXPECT_EQ(code_of([&] { cfg.validate(); }), ErrorCode::kInvalidArgument);
}

TEST(CheckResult, MarginAndTolerance) {
  const CheckResult ok = CheckResult::make("x", 1.0, 1.0 + 5e-10, "c");
  EXPECT_TRUE(ok.passed);
  EXPECT_NEAR(ok.margin, -5e-10, 1e-15);
  EXPECT_FALSE(CheckResult::make("x", 1.0, 1.0 + 2e-9, "c").passed);
  EXPECT_TRUE(CheckResult::make("x", 1.0, 1.05, "c", 0.1).passed);
}

TEST(CheckScenario, FigureOneFixtureMargin) {
  const std::vector<Observable> a = {sx(), sz()};
  const TrialOutcome t = check_scenario(fig1_state(kPi / 2.0), a, a, "fig1");
  EXPECT_TRUE(t.degenerate.empty());
  bool found = false;
  for (const CheckResult& c : t.checks) {
    EXPECT_TRUE(c.passed) << c.name;
    if (c.name == "thm1") {
      found = true;
      EXPECT_NEAR(c.margin, 2.0 - 2.0 / (1.0 + kSqrt3 / 2.0), 1e-12);
      EXPECT_NEAR(c.margin, 0.9282, 1e-4);
    }
  }
  EXPECT_TRUE(found);
}

TEST(CheckScenario, FigureTwoFixtureIsTight) {
  const std::vector<Observable> a = {sx(), sy(), sz()};
  const TrialOutcome t = check_scenario(fig2_state(kPi / 2.0), a, a, "fig2");
  for (const CheckResult& c : t.checks) {
    EXPECT_TRUE(c.passed) << c.name;
    if (c.name == "thm1") EXPECT_NEAR(c.margin, 0.0, 1e-12);
  }
  EXPECT_TRUE(t.degenerate.empty());
}

TEST(CheckScenario, VanishingCovariancesAreRecordedByName) {
  const std::vector<Observable> a = {sx()};
  const std::vector<Observable> b = {sy()};
  const TrialOutcome t = check_scenario(state_from_bloch({0, 0, 0}), a, b, "mixed");
  ASSERT_EQ(t.degenerate.size(), 1u);
  EXPECT_NE(t.degenerate[0].find("AllCovariancesVanish"), std::string::npos);
  for (const CheckResult& c : t.checks) EXPECT_TRUE(c.passed) << c.name;
}

TEST(CheckPati, FixtureIsTight) {
  const std::vector<Observable> a = {sx()};
  const std::vector<Observable> b = {sy()};
  const CanonicalSets sets{a, b, Observable("C", pauli_z() * 2.0)};
  const CheckResult c = check_pati(state_from_bloch({0, 0, 1}), sets, "pati");
  EXPECT_TRUE(c.passed);
  EXPECT_NEAR(c.margin, 0.0, 1e-15);
}

TrialConfig small_config() {
  TrialConfig cfg;
  cfg.seed = 1234;
  cfg.trials = 150;
  cfg.dims = {2, 5};
  cfg.set_sizes = {1, 5};
  return cfg;
}

TEST(RunSuite, SmallConfigPassesWithBroadCoverage) {
  const SuiteReport r = run_suite(small_config());
  EXPECT_TRUE(r.all_passed()) << summary_text(r);
  EXPECT_EQ(r.trials, 150u);
  const auto names = r.by_name();
  EXPECT_GE(names.size(), 9u);
  for (const char* required : {"thm1", "maccone", "cor1_chain", "chen_fei", "thm2", "thm2_ge_cor2", "cor2",
                               "c22", "cor3", "pati", "gram_psd", "gram_unit_diagonal", "lambda_max_le_n",
                               "overlap_entries_le_1", "sum_identity", "sur_identity", "gram_route"})
    EXPECT_TRUE(names.contains(required)) << required;
  EXPECT_LT(static_cast<double>(r.skipped_degenerate), 0.01 * static_cast<double>(r.trials) + 1.0);
}

TEST(RunSuite, DeterministicAndThreadInvariant) {
  TrialConfig cfg = small_config();
  const std::string first = checks_to_csv(run_suite(cfg));
  EXPECT_EQ(first, checks_to_csv(run_suite(cfg)));
  cfg.threads = 3;
  EXPECT_EQ(first, checks_to_csv(run_suite(cfg)));
  cfg.seed = 1235;
  EXPECT_NE(first, checks_to_csv(run_suite(cfg)));
}

TEST(RunSuite, CsvAndSummaryShape) {
  TrialConfig cfg = small_config();
  cfg.trials = 3;
  const SuiteReport r = run_suite(cfg);
  const std::string csv = checks_to_csv(r);
  EXPECT_EQ(csv.rfind("name,lhs,rhs,margin,tolerance,passed,context\n", 0), 0u);
  EXPECT_EQ(csv.find('\r'), std::string::npos);
  EXPECT_NE(csv.find("seed=1234 trial=2 dim="), std::string::npos);
  const std::string text = summary_text(r);
  EXPECT_NE(text.find("trials: 3\n"), std::string::npos);
  EXPECT_NE(text.find("checks run: "), std::string::npos);
  EXPECT_NE(text.find("thm1: run="), std::string::npos);
  EXPECT_EQ(text.find("FAILED"), std::string::npos);
}

TEST(RunSuite, FailedChecksAreReported) {
  SuiteReport r;
  r.checks.push_back(CheckResult::make("thm1", 1.0, 2.0, "seed=1 trial=0"));
  EXPECT_FALSE(r.all_passed());
  EXPECT_NE(summary_text(r).find("FAILED thm1: lhs=1 rhs=2 margin=-1 [seed=1 trial=0]"), std::string::npos);
}

}  // namespace
}  // namespace varbound
