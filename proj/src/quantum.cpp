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

#include <cmath>
#include <string>

namespace varbound {
namespace {

void require_same_dim(const QuantumState& s, const CMatrix& op) {
  if (op.rows() != s.dim() || op.cols() != s.dim())
    throw Error(ErrorCode::kDimMismatch, "operator is " + std::to_string(op.rows()) + "x" +
                                             std::to_string(op.cols()) + ", state has dimension " +
                                             std::to_string(s.dim()));
}

// Tr(rho * op) without forming the product.
Complex trace_product(const CMatrix& rho, const CMatrix& op) {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < rho.rows(); ++i)
    for (std::size_t j = 0; j < rho.cols(); ++j) sum += rho(i, j) * op(j, i);
  return sum;
}

}  // namespace

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

QuantumState QuantumState::from_matrix(const CMatrix& m) {
  require_hermitian(m);
  CMatrix rho = hermitian_part(m);
  const double trace_error = std::abs(rho.trace() - 1.0);
  if (trace_error > kTraceTolerance)
    throw Error(ErrorCode::kTraceNotOne, "trace is " + std::to_string(rho.trace().real()));
  const HermEigen eig = eigh(rho);
  if (eig.eigenvalues.front() < -kEigenClampWindow)
    throw Error(ErrorCode::kNotPSD, "eigenvalue " + std::to_string(eig.eigenvalues.front()));
  CMatrix root = psd_sqrt(rho);
  return QuantumState(std::move(rho), std::move(root));
}

double QuantumState::purity() const { return trace_product(rho_, rho_).real(); }

QuantumState validate_state(const CMatrix& m) { return QuantumState::from_matrix(m); }

QuantumState state_from_bloch(const BlochVector& r) {
  if (!std::isfinite(r.x) || !std::isfinite(r.y) || !std::isfinite(r.z))
    throw Error(ErrorCode::kNonFinite, "Bloch vector has NaN or Inf components");
  if (r.norm() > 1.0 + kBlochTolerance)
    throw Error(ErrorCode::kBlochNormExceeded, "|r| = " + std::to_string(r.norm()));
  CMatrix rho = CMatrix::identity(2) + r.x * pauli_x() + r.y * pauli_y() + r.z * pauli_z();
  return QuantumState::from_matrix(rho * 0.5);
}

Observable::Observable(std::string label, CMatrix matrix)
    : label_(std::move(label)), matrix_(std::move(matrix)) {
  require_hermitian(matrix_);
}

CMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
CMatrix pauli_y() { return {{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}}; }
CMatrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

Observable named_pauli(std::string_view name) {
  if (name == "sigma_x" || name == "sigma1") return {std::string(name), pauli_x()};
  if (name == "sigma_y" || name == "sigma2") return {std::string(name), pauli_y()};
  if (name == "sigma_z" || name == "sigma3") return {std::string(name), pauli_z()};
  throw Error(ErrorCode::kInvalidArgument, "unknown Pauli name '" + std::string(name) + "'");
}

Observable sum_of(std::span<const Observable> obs) {
  if (obs.empty()) throw Error(ErrorCode::kEmptySet, "sum of an empty observable set");
  CMatrix total = obs.front().matrix();
  std::string label = obs.front().label();
  for (std::size_t i = 1; i < obs.size(); ++i) {
    if (obs[i].dim() != total.rows())
      throw Error(ErrorCode::kDimMismatch, "observables of different dimension");
    total += obs[i].matrix();
    label += "+" + obs[i].label();
  }
  return {std::move(label), std::move(total)};
}

Complex expectation(const QuantumState& s, const CMatrix& op) {
  require_same_dim(s, op);
  return trace_product(s.rho(), op);
}

double expectation(const QuantumState& s, const Observable& a) {
  return expectation(s, a.matrix()).real();
}

double variance(const QuantumState& s, const Observable& a) {
  require_same_dim(s, a.matrix());
  const double mean = expectation(s, a);
  const double second = trace_product(s.rho(), a.matrix() * a.matrix()).real();
  return std::max(second - mean * mean, 0.0);
}

double std_dev(const QuantumState& s, const Observable& a) { return std::sqrt(variance(s, a)); }

PairMoments pair_moments(const QuantumState& s, const Observable& a, const Observable& b) {
  require_same_dim(s, a.matrix());
  require_same_dim(s, b.matrix());
  const Complex ab = trace_product(s.rho(), a.matrix() * b.matrix());
  const Complex ba = trace_product(s.rho(), b.matrix() * a.matrix());
  const double mean_a = expectation(s, a);
  const double mean_b = expectation(s, b);
  return {ab - ba, ab + ba, ab - mean_a * mean_b};
}

CMatrix normalized_deviation(const QuantumState& s, const Observable& a) {
  require_same_dim(s, a.matrix());
  const double var = variance(s, a);
  if (var <= kZeroVariance) return CMatrix::zeros(s.dim(), s.dim());
  CMatrix centered = a.matrix() - expectation(s, a) * CMatrix::identity(s.dim());
  return (centered * s.sqrt_rho()) * (1.0 / std::sqrt(var));
}

}  // namespace varbound
