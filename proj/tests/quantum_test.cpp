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

#include "varbound/quantum.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "varbound/verify.hpp"

namespace varbound {
namespace {

using namespace testing;

const Complex kI(0.0, 1.0);

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{};
}

TEST(StateFromBloch, Examples) {
  EXPECT_LE(max_abs_diff(state_from_bloch({0, 0, 0}).rho(), CMatrix::identity(2) * 0.5), 1e-16);
  const double up[] = {1.0, 0.0};
  EXPECT_LE(max_abs_diff(state_from_bloch({0, 0, 1}).rho(), CMatrix::diagonal(up)), 1e-16);
  const CMatrix expected{{0.5, kSqrt3 / 4.0}, {kSqrt3 / 4.0, 0.5}};
  EXPECT_LE(max_abs_diff(state_from_bloch({kSqrt3 / 2.0, 0, 0}).rho(), expected), 1e-16);
}

TEST(StateFromBloch, RejectsLongVectors) {
  EXPECT_EQ(code_of([] { state_from_bloch({0.8, 0.8, 0.0}); }), ErrorCode::kBlochNormExceeded);
  EXPECT_NO_THROW(state_from_bloch({0.0, 0.0, 1.0 + 5e-13}));
}

TEST(ValidateState, Examples) {
  const double pure[] = {1.0, 0.0};
  EXPECT_NEAR(validate_state(CMatrix::diagonal(pure)).purity(), 1.0, 1e-15);
  const double mixed[] = {0.5, 0.5};
  EXPECT_NEAR(validate_state(CMatrix::diagonal(mixed)).purity(), 0.5, 1e-15);
  const double heavy[] = {0.6, 0.5};
  EXPECT_EQ(code_of([&] { validate_state(CMatrix::diagonal(heavy)); }), ErrorCode::kTraceNotOne);
  const double negative[] = {1.2, -0.2};
  EXPECT_EQ(code_of([&] { validate_state(CMatrix::diagonal(negative)); }), ErrorCode::kNotPSD);
  EXPECT_EQ(code_of([] { validate_state(CMatrix{{0.5, 0.1}, {0.3, 0.5}}); }), ErrorCode::kNotHermitian);
  EXPECT_EQ(code_of([] { validate_state(CMatrix(2, 3)); }), ErrorCode::kNotSquare);
}

TEST(ValidateState, CachesSquareRoot) {
  SplitMix64 rng(1);
  const QuantumState s = random_state(4, 2, rng);
  EXPECT_LE((s.sqrt_rho() * s.sqrt_rho() - s.rho()).frobenius_norm(), 1e-10);
}

TEST(Expectation, Examples) {
  const QuantumState s = state_from_bloch({0.3, -0.4, 0.5});
  EXPECT_NEAR(expectation(s, sx()), 0.3, 1e-12);
  EXPECT_NEAR(expectation(s, sy()), -0.4, 1e-12);
  EXPECT_NEAR(expectation(s, sz()), 0.5, 1e-12);
  EXPECT_NEAR(expectation(fig1_state(0.0), sx()), kSqrt3 / 2.0, 1e-15);
  EXPECT_NEAR(expectation(s, Observable("I", CMatrix::identity(2))), 1.0, 1e-15);
  EXPECT_EQ(code_of([&] { expectation(s, Observable("I3", CMatrix::identity(3))); }),
            ErrorCode::kDimMismatch);
}

TEST(Expectation, BlochComponentsOnRandomQubits) {
  Gaussian g(21);
  for (int trial = 0; trial < 100; ++trial) {
    BlochVector r{g.real(), g.real(), g.real()};
    const double scale = 0.999 * std::abs(std::tanh(g.real())) / r.norm();
    r = {r.x * scale, r.y * scale, r.z * scale};
    const QuantumState s = state_from_bloch(r);
    EXPECT_NEAR(expectation(s, sx()), r.x, 1e-12);
    EXPECT_NEAR(expectation(s, sy()), r.y, 1e-12);
    EXPECT_NEAR(expectation(s, sz()), r.z, 1e-12);
  }
}

TEST(Variance, FigureOneClosedForms) {
  for (double theta : {0.0, 0.3, kPi / 3.0, kPi / 2.0, 2.5}) {
    const QuantumState s = fig1_state(theta);
    EXPECT_NEAR(variance(s, sz()), 1.0, 1e-12);
    EXPECT_NEAR(variance(s, sx()), 1.0 - 0.75 * std::pow(std::cos(theta), 2), 1e-12);
  }
}

TEST(Variance, ZeroOnEigenstatesAndNonNegative) {
  EXPECT_EQ(variance(state_from_bloch({0, 0, 1}), sz()), 0.0);
  EXPECT_EQ(variance(state_from_bloch({0, 0, -1}), sz()), 0.0);

  SplitMix64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const Observable a = random_observable(4, rng);
    const HermEigen e = eigh(a.matrix());
    // Projector onto the first eigenvector.
    CMatrix rho(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) rho(i, j) = e.eigenvectors(i, 0) * std::conj(e.eigenvectors(j, 0));
    const QuantumState s = validate_state(rho);
    EXPECT_LE(variance(s, a), 1e-12);
    EXPECT_GT(variance(random_state(4, 4, rng), a), 0.0);
  }
}

TEST(PairMoments, Examples) {
  const PairMoments mixed = pair_moments(state_from_bloch({0, 0, 0}), sx(), sy());
  EXPECT_NEAR(std::abs(mixed.comm_mean), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(mixed.anticomm_mean), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(mixed.covariance), 0.0, 1e-15);

  const PairMoments zy = pair_moments(state_from_bloch({0.5, 0, 0}), sz(), sy());
  EXPECT_LE(std::abs(zy.comm_mean - (-kI)), 1e-15);
  EXPECT_LE(std::abs(zy.covariance - (-0.5 * kI)), 1e-15);

  const QuantumState s = fig1_state(1.0);
  const PairMoments self = pair_moments(s, sx(), sx());
  EXPECT_LE(std::abs(self.comm_mean), 1e-15);
  EXPECT_NEAR(self.covariance.real(), variance(s, sx()), 1e-14);
  EXPECT_NEAR(self.covariance.imag(), 0.0, 1e-15);
}

TEST(PairMoments, InvariantsOnRandomInputs) {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const auto dim = static_cast<std::size_t>(rng.uniform_int(2, 5));
    const QuantumState s = random_state(dim, static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(dim))), rng);
    const Observable a = random_observable(dim, rng);
    const Observable b = random_observable(dim, rng);
    const PairMoments pm = pair_moments(s, a, b);
    EXPECT_LE(std::abs(pm.comm_mean.real()), 1e-10);
    EXPECT_LE(std::abs(pm.anticomm_mean.imag()), 1e-10);
    const double ma = expectation(s, a);
    const double mb = expectation(s, b);
    EXPECT_LE(std::abs(pm.covariance - (pm.anticomm_mean / 2.0 - ma * mb + pm.comm_mean / 2.0)), 1e-10);
    // |cov|^2 splits into the commutator and anticommutator parts.
    const double split = std::norm(pm.comm_mean / (2.0 * kI)) + std::norm(pm.anticomm_mean / 2.0 - ma * mb);
    EXPECT_NEAR(std::norm(pm.covariance), split, 1e-10);
  }
}

TEST(PairMoments, SumOfObservablesVarianceIsSumOfCovariances) {
  SplitMix64 rng(78);
  for (int trial = 0; trial < 200; ++trial) {
    const auto dim = static_cast<std::size_t>(rng.uniform_int(2, 5));
    const QuantumState s = random_state(dim, dim, rng);
    std::vector<Observable> obs;
    const int n = rng.uniform_int(2, 5);
    for (int i = 0; i < n; ++i) obs.push_back(random_observable(dim, rng));
    Complex total = 0.0;
    for (const auto& a : obs)
      for (const auto& b : obs) total += pair_moments(s, a, b).covariance;
    EXPECT_LE(std::abs(total - variance(s, sum_of(obs))), 1e-10);
  }
}

TEST(NormalizedDeviation, ZeroOperatorOnEigenstate) {
  const CMatrix p = normalized_deviation(state_from_bloch({0, 0, 1}), sz());
  EXPECT_EQ(p, CMatrix(2, 2));
}

TEST(NormalizedDeviation, MaximallyMixedPauliX) {
  const CMatrix p = normalized_deviation(state_from_bloch({0, 0, 0}), sx());
  EXPECT_LE(max_abs_diff(p, pauli_x() * (1.0 / std::sqrt(2.0))), 1e-15);
  EXPECT_NEAR(p.frobenius_norm(), 1.0, 1e-15);
}

TEST(NormalizedDeviation, FigureOneOverlapAtQuarterTurn) {
  const QuantumState s = fig1_state(kPi / 2.0);
  const CMatrix p1 = normalized_deviation(s, sx());
  const CMatrix p2 = normalized_deviation(s, sz());
  EXPECT_NEAR(std::abs(frobenius_inner(p1, p2)), kSqrt3 / 2.0, 1e-12);
}

TEST(NormalizedDeviation, UnitNormWhenNonzero) {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto dim = static_cast<std::size_t>(rng.uniform_int(2, 6));
    const QuantumState s = random_state(dim, static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(dim))), rng);
    const CMatrix p = normalized_deviation(s, random_observable(dim, rng));
    EXPECT_NEAR(p.frobenius_norm(), 1.0, 1e-10);
  }
}

TEST(Observable, RejectsNonHermitianAndNamesPaulis) {
  EXPECT_EQ(code_of([] { Observable("bad", CMatrix{{0.0, 1.0}, {0.0, 0.0}}); }), ErrorCode::kNotHermitian);
  EXPECT_EQ(named_pauli("sigma1").matrix(), pauli_x());
  EXPECT_EQ(named_pauli("sigma2").matrix(), pauli_y());
  EXPECT_EQ(named_pauli("sigma3").matrix(), pauli_z());
  EXPECT_EQ(code_of([] { named_pauli("sigma_w"); }), ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace varbound
