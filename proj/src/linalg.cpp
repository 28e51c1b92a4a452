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

#include "varbound/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace varbound {
namespace {

constexpr int kMaxSweeps = 100;
constexpr double kJacobiTolerance = 1e-14;
constexpr double kOrthogonalityTolerance = 1e-15;
constexpr double kPhaseThreshold = 1e-12;

bool all_finite(std::span<const Complex> xs) {
  return std::all_of(xs.begin(), xs.end(), [](Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

void require_finite(const CMatrix& m) {
  if (!all_finite(m.entries())) throw Error(ErrorCode::kNonFinite, "matrix has NaN or Inf entries");
}

std::string shape_of(const CMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

// Parameters of the 2x2 unitary that annihilates the (p, q) entry of a
// Hermitian pair [[app, apq], [conj(apq), aqq]]. The rotation is
//   U_pp = c, U_pq = s*phase, U_qp = -s*conj(phase), U_qq = c.
struct Rotation {
  double c;
  double s;
  Complex phase;
};

Rotation jacobi_rotation(double app, double aqq, Complex apq) {
  const double mag = std::abs(apq);
  const double theta = (aqq - app) / (2.0 * mag);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  return {c, t * c, apq / mag};
}

// M <- M U restricted to columns p and q.
void rotate_columns(CMatrix& m, std::size_t p, std::size_t q, const Rotation& r) {
  const Complex upq = r.s * r.phase;
  const Complex uqp = -r.s * std::conj(r.phase);
  for (std::size_t k = 0; k < m.rows(); ++k) {
    const Complex mp = m(k, p);
    const Complex mq = m(k, q);
    m(k, p) = r.c * mp + uqp * mq;
    m(k, q) = upq * mp + r.c * mq;
  }
}

// M <- U^dagger M restricted to rows p and q.
void rotate_rows(CMatrix& m, std::size_t p, std::size_t q, const Rotation& r) {
  const Complex dpq = -r.s * r.phase;             // conj(U_qp)
  const Complex dqp = r.s * std::conj(r.phase);   // conj(U_pq)
  for (std::size_t k = 0; k < m.cols(); ++k) {
    const Complex mp = m(p, k);
    const Complex mq = m(q, k);
    m(p, k) = r.c * mp + dpq * mq;
    m(q, k) = dqp * mp + r.c * mq;
  }
}

double off_diagonal_norm(const CMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

void fix_column_phases(CMatrix& v) {
  for (std::size_t col = 0; col < v.cols(); ++col) {
    for (std::size_t row = 0; row < v.rows(); ++row) {
      const Complex x = v(row, col);
      const double mag = std::abs(x);
      if (mag <= kPhaseThreshold) continue;
      const Complex unwind = std::conj(x) / mag;
      for (std::size_t k = 0; k < v.rows(); ++k) v(k, col) *= unwind;
      v(row, col) = Complex(std::abs(v(row, col)), 0.0);
      break;
    }
  }
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw Error(ErrorCode::kInvalidArgument, "matrix dimensions must be positive");
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw Error(ErrorCode::kInvalidArgument, "matrix dimensions must be positive");
  if (data_.size() != rows * cols)
    throw Error(ErrorCode::kShapeMismatch, "entry count " + std::to_string(data_.size()) +
                                               " does not match " + std::to_string(rows) + "x" +
                                               std::to_string(cols));
  if (!all_finite(data_)) throw Error(ErrorCode::kNonFinite, "matrix has NaN or Inf entries");
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  if (rows_ == 0 || cols_ == 0) throw Error(ErrorCode::kInvalidArgument, "matrix dimensions must be positive");
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::kShapeMismatch, "ragged matrix initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
  if (!all_finite(data_)) throw Error(ErrorCode::kNonFinite, "matrix has NaN or Inf entries");
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const double> values) {
  CMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex CMatrix::trace() const {
  if (!is_square()) throw Error(ErrorCode::kNotSquare, "trace of " + shape_of(*this) + " matrix");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const Complex& z : data_) sum += std::norm(z);
  return std::sqrt(sum);
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(ErrorCode::kShapeMismatch, shape_of(*this) + " + " + shape_of(other));
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(ErrorCode::kShapeMismatch, shape_of(*this) + " - " + shape_of(other));
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex scale) {
  for (Complex& z : data_) z *= scale;
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::kShapeMismatch, shape_of(a) + " * " + shape_of(b));
  CMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

double hermiticity_defect(const CMatrix& m) {
  double sum = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) sum += std::norm(m(i, j) - std::conj(m(j, i)));
  return std::sqrt(sum);
}

void require_hermitian(const CMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::kNotSquare, shape_of(m) + " matrix is not square");
  require_finite(m);
  const double defect = hermiticity_defect(m);
  const double limit = kHermitianTolerance * std::max(1.0, m.frobenius_norm());
  if (!(defect <= limit))
    throw Error(ErrorCode::kNotHermitian,
                "||H - H^dagger||_F = " + std::to_string(defect) + " exceeds " + std::to_string(limit));
}

CMatrix hermitian_part(const CMatrix& m) {
  CMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  return out;
}

HermEigen eigh(const CMatrix& h) {
  require_hermitian(h);
  const std::size_t n = h.rows();
  CMatrix a = hermitian_part(h);
  CMatrix v = CMatrix::identity(n);

  const double scale = a.frobenius_norm();
  if (scale > 0.0) {
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      if (off_diagonal_norm(a) <= kJacobiTolerance * scale) break;
      for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
          const Complex apq = a(p, q);
          if (std::abs(apq) == 0.0) continue;
          const Rotation r = jacobi_rotation(a(p, p).real(), a(q, q).real(), apq);
          rotate_columns(a, p, q, r);
          rotate_rows(a, p, q, r);
          rotate_columns(v, p, q, r);
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          a(p, p) = a(p, p).real();
          a(q, q) = a(q, q).real();
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  HermEigen out{std::vector<double>(n), CMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t row = 0; row < n; ++row) out.eigenvectors(row, k) = v(row, order[k]);
  }
  fix_column_phases(out.eigenvectors);
  return out;
}

double max_eigenvalue(const CMatrix& h) { return eigh(h).eigenvalues.back(); }

double min_eigenvalue(const CMatrix& h) { return eigh(h).eigenvalues.front(); }

CMatrix psd_sqrt(const CMatrix& h) {
  const HermEigen eig = eigh(h);
  if (eig.eigenvalues.front() < -kEigenClampWindow)
    throw Error(ErrorCode::kNegativeEigenvalue,
                "eigenvalue " + std::to_string(eig.eigenvalues.front()) + " below -1e-10");
  const std::size_t n = h.rows();
  CMatrix scaled = eig.eigenvectors;
  for (std::size_t k = 0; k < n; ++k) {
    const double root = std::sqrt(std::max(eig.eigenvalues[k], 0.0));
    for (std::size_t row = 0; row < n; ++row) scaled(row, k) *= root;
  }
  return hermitian_part(scaled * eig.eigenvectors.adjoint());
}

std::vector<double> singular_values(const CMatrix& a) {
  require_finite(a);
  // One-sided Jacobi orthogonalises the columns of a tall matrix.
  CMatrix w = a.rows() >= a.cols() ? a : a.adjoint();
  const std::size_t rows = w.rows();
  const std::size_t cols = w.cols();

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < cols; ++p) {
      for (std::size_t q = p + 1; q < cols; ++q) {
        double alpha = 0.0;
        double beta = 0.0;
        Complex gamma = 0.0;
        for (std::size_t k = 0; k < rows; ++k) {
          alpha += std::norm(w(k, p));
          beta += std::norm(w(k, q));
          gamma += std::conj(w(k, p)) * w(k, q);
        }
        const double mag = std::abs(gamma);
        if (mag == 0.0 || mag <= kOrthogonalityTolerance * std::sqrt(alpha * beta)) continue;
        rotated = true;
        rotate_columns(w, p, q, jacobi_rotation(alpha, beta, gamma));
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sigma(cols);
  for (std::size_t k = 0; k < cols; ++k) {
    double sum = 0.0;
    for (std::size_t row = 0; row < rows; ++row) sum += std::norm(w(row, k));
    sigma[k] = std::sqrt(sum);
  }
  std::sort(sigma.begin(), sigma.end(), std::greater<>());
  return sigma;
}

Complex frobenius_inner(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::kShapeMismatch, "inner product of " + shape_of(a) + " and " + shape_of(b));
  Complex sum = 0.0;
  const auto xs = a.entries();
  const auto ys = b.entries();
  for (std::size_t i = 0; i < xs.size(); ++i) sum += std::conj(xs[i]) * ys[i];
  return sum;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

CMatrix anticommutator(const CMatrix& a, const CMatrix& b) { return a * b + b * a; }

}  // namespace varbound
