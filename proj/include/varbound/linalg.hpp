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

// Dense complex matrices for small dimensions, with a cyclic Jacobi
// Hermitian eigensolver, a PSD square root and one-sided Jacobi singular
// values. Sized for dimensions up to a few dozen; nothing here is blocked or
// vectorised.

#ifndef VARBOUND_LINALG_HPP
#define VARBOUND_LINALG_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "varbound/error.hpp"

namespace varbound {

using Complex = std::complex<double>;

// Row-major dense complex matrix. Construction rejects NaN/Inf entries, so
// every CMatrix in circulation is finite.
class CMatrix {
 public:
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  // Nested initializer, one inner list per row.
  CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMatrix identity(std::size_t n);
  static CMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static CMatrix diagonal(std::span<const double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Complex> entries() const noexcept { return data_; }

  CMatrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(Complex scale);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
  friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

  bool operator==(const CMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

struct HermEigen {
  std::vector<double> eigenvalues;  // ascending
  CMatrix eigenvectors;             // column k pairs with eigenvalues[k]
};

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kEigenClampWindow = 1e-10;

// Throws NotSquare / NotHermitian when `m` is not Hermitian within
// kHermitianTolerance * max(1, ||m||_F).
void require_hermitian(const CMatrix& m);
double hermiticity_defect(const CMatrix& m);

// (A + A^dagger) / 2
CMatrix hermitian_part(const CMatrix& m);

// Cyclic Jacobi. Eigenvalues ascending; each eigenvector's first component
// with magnitude above 1e-12 is rotated onto the positive real axis.
HermEigen eigh(const CMatrix& h);

double max_eigenvalue(const CMatrix& h);
double min_eigenvalue(const CMatrix& h);

// Hermitian PSD square root. Eigenvalues in [-1e-10, 0) are clamped to zero;
// anything more negative raises NegativeEigenvalue.
CMatrix psd_sqrt(const CMatrix& h);

// Descending singular values, min(rows, cols) of them.
std::vector<double> singular_values(const CMatrix& a);

// Tr(A^dagger B)
Complex frobenius_inner(const CMatrix& a, const CMatrix& b);

CMatrix commutator(const CMatrix& a, const CMatrix& b);
CMatrix anticommutator(const CMatrix& a, const CMatrix& b);

}  // namespace varbound

#endif  // VARBOUND_LINALG_HPP
