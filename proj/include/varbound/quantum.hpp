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

// States, observables and the first/second moments the bounds are built
// from.

#ifndef VARBOUND_QUANTUM_HPP
#define VARBOUND_QUANTUM_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "varbound/linalg.hpp"

namespace varbound {

// Variances at or below this value are treated as exactly zero: the
// normalized deviation of such an observable is the zero operator.
inline constexpr double kZeroVariance = 1e-12;
inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kBlochTolerance = 1e-12;

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
};

// A validated density matrix. Immutable; the PSD square root is computed once
// at construction.
class QuantumState {
 public:
  // Validates Hermiticity, unit trace and positivity. Throws NotSquare,
  // NotHermitian, TraceNotOne or NotPSD.
  static QuantumState from_matrix(const CMatrix& rho);

  std::size_t dim() const noexcept { return rho_.rows(); }
  const CMatrix& rho() const noexcept { return rho_; }
  const CMatrix& sqrt_rho() const noexcept { return sqrt_rho_; }
  double purity() const;

 private:
  QuantumState(CMatrix rho, CMatrix sqrt_rho)
      : rho_(std::move(rho)), sqrt_rho_(std::move(sqrt_rho)) {}

  CMatrix rho_;
  CMatrix sqrt_rho_;
};

// (I + x sigma_x + y sigma_y + z sigma_z) / 2
QuantumState state_from_bloch(const BlochVector& r);
QuantumState validate_state(const CMatrix& m);

class Observable {
 public:
  // Throws NotSquare / NotHermitian.
  Observable(std::string label, CMatrix matrix);

  const std::string& label() const noexcept { return label_; }
  const CMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.rows(); }

 private:
  std::string label_;
  CMatrix matrix_;
};

CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();

// Accepts sigma_x/sigma_y/sigma_z and the aliases sigma1/sigma2/sigma3.
// Throws InvalidArgument for anything else.
Observable named_pauli(std::string_view name);

// Sum of observables, labelled "A+B+...".
Observable sum_of(std::span<const Observable> obs);

struct PairMoments {
  Complex comm_mean;      // <[A, B]>
  Complex anticomm_mean;  // <{A, B}>
  Complex covariance;     // <AB> - <A><B>
};

double expectation(const QuantumState& s, const Observable& a);
Complex expectation(const QuantumState& s, const CMatrix& op);
// <A^2> - <A>^2 clamped at zero.
double variance(const QuantumState& s, const Observable& a);
double std_dev(const QuantumState& s, const Observable& a);
PairMoments pair_moments(const QuantumState& s, const Observable& a, const Observable& b);

// (A - <A>) sqrt(rho) / Delta A, or the zero matrix when the variance is at
// most kZeroVariance. Unit Frobenius norm whenever nonzero.
CMatrix normalized_deviation(const QuantumState& s, const Observable& a);

}  // namespace varbound

#endif  // VARBOUND_QUANTUM_HPP
