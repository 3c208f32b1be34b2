// Copyright 2026 The tripent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>

namespace tripent {

using Complex = std::complex<double>;

/// Fixed-size dense complex matrix, row-major.
///
/// Tripartite matrices use the basis index 4i+2j+k for |i_A j_B k_C>;
/// bipartite ones use 2m+n for |m_X n_Y>.
template <std::size_t N>
class Matrix {
 public:
  static constexpr std::size_t kDim = N;

  constexpr Matrix() = default;

  static Matrix zero() { return Matrix{}; }

  static Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix diagonal(const std::array<double, N>& d) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  /// Row-major initialiser; missing trailing entries are zero.
  static Matrix from_rows(std::initializer_list<Complex> values) {
    Matrix m;
    std::size_t k = 0;
    for (const Complex& v : values) {
      if (k >= N * N) break;
      m.data_[k++] = v;
    }
    return m;
  }

  /// Projector |v><v| (no normalisation applied).
  static Matrix outer(const std::array<Complex, N>& v) {
    Matrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) m(r, c) = v[r] * std::conj(v[c]);
    return m;
  }

  Complex& operator()(std::size_t row, std::size_t col) {
    return data_[row * N + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * N + col];
  }

  const std::array<Complex, N * N>& data() const { return data_; }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix adjoint() const {
    Matrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) m(r, c) = std::conj((*this)(c, r));
    return m;
  }

  /// (M + M^dagger) / 2
  Matrix hermitian_part() const {
    Matrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c)
        m(r, c) = 0.5 * ((*this)(r, c) + std::conj((*this)(c, r)));
    return m;
  }

  /// Largest entrywise |M[a][b] - conj(M[b][a])|.
  double hermiticity_error() const {
    double err = 0.0;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = r; c < N; ++c)
        err = std::max(err, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return err;
  }

  bool all_finite() const {
    for (const Complex& z : data_)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : data_) s += std::norm(z);
    return std::sqrt(s);
  }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(Complex s) {
    for (Complex& z : data_) z *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
  friend Matrix operator*(Complex s, Matrix a) { return a *= s; }
  friend Matrix operator*(double s, Matrix a) { return a *= Complex(s); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex ark = a(r, k);
        if (ark == Complex(0.0)) continue;
        for (std::size_t c = 0; c < N; ++c) m(r, c) += ark * b(k, c);
      }
    return m;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::array<Complex, N * N> data_{};
};

using Matrix2 = Matrix<2>;
using Matrix4 = Matrix<4>;
using Matrix8 = Matrix<8>;

/// Largest entrywise modulus of a - b.
template <std::size_t N>
double max_abs_diff(const Matrix<N>& a, const Matrix<N>& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < N * N; ++k)
    d = std::max(d, std::abs(a.data()[k] - b.data()[k]));
  return d;
}

}  // namespace tripent
