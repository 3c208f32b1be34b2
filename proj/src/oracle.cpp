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

#include "tripent/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace tripent::oracle {

namespace {

// Cauchy bound on |root|.
double root_bound(const std::vector<Complex>& c) {
  const double lead = std::abs(c.back());
  double b = 0.0;
  for (std::size_t k = 0; k + 1 < c.size(); ++k)
    b = std::max(b, std::abs(c[k]) / lead);
  return 1.0 + b;
}

// Laguerre iteration in complex arithmetic from `x`. For a real-rooted
// polynomial started below every root it walks up to the smallest one; a
// multiple root perturbed into a complex cluster is still reached.
Complex laguerre(const std::vector<Complex>& a, Complex x) {
  const std::size_t m = a.size() - 1;
  const double md = static_cast<double>(m);
  static constexpr double kFrac[] = {0.5, 0.25, 0.75, 0.13, 0.38, 0.62, 0.88, 1.0};
  for (int it = 1; it <= 800; ++it) {
    Complex b = a[m], d = 0.0, f = 0.0;
    double err = std::abs(b);
    const double ax = std::abs(x);
    for (std::size_t j = m; j-- > 0;) {
      f = x * f + d;
      d = x * d + b;
      b = x * b + a[j];
      err = std::abs(b) + ax * err;
    }
    if (std::abs(b) <= 1e-16 * err) return x;
    const Complex g = d / b;
    const Complex g2 = g * g;
    const Complex h = g2 - 2.0 * f / b;
    const Complex sq = std::sqrt((md - 1.0) * (md * h - g2));
    const Complex gp = g + sq;
    const Complex gm = g - sq;
    const Complex den = std::abs(gp) >= std::abs(gm) ? gp : gm;
    const Complex dx = std::abs(den) > 0.0
                           ? md / den
                           : std::polar(1.0 + ax, static_cast<double>(it));
    const Complex next = x - dx;
    if (next == x) return x;
    // Occasional fractional step breaks limit cycles.
    x = (it % 10 != 0) ? next : x - kFrac[(it / 10) % 8] * dx;
  }
  return x;
}

}  // namespace

template <std::size_t N>
std::vector<double> characteristic_polynomial(const Matrix<N>& m) {
  std::vector<Complex> c(N + 1);
  c[N] = 1.0;
  Matrix<N> mk;  // M_0 = 0
  for (std::size_t k = 1; k <= N; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < N; ++i) mk(i, i) += c[N - k + 1];
    c[N - k] = -(m * mk).trace() / static_cast<double>(k);
  }
  std::vector<double> out(N + 1);
  for (std::size_t k = 0; k <= N; ++k) out[k] = c[k].real();
  return out;
}

std::vector<double> real_roots(const std::vector<double>& coeffs) {
  const std::vector<Complex> original(coeffs.begin(), coeffs.end());
  std::vector<Complex> work = original;
  std::vector<double> roots;
  while (work.size() > 1) {
    Complex r = laguerre(work, Complex(-root_bound(work), 0.0));
    // Polish on the undeflated polynomial, unless that jumps to another root.
    const Complex polished = laguerre(original, r);
    if (std::abs(polished - r) <= 1e-7 * (1.0 + std::abs(r))) r = polished;
    roots.push_back(r.real());
    // Synthetic division by (x - r).
    std::vector<Complex> q(work.size() - 1);
    Complex carry = 0.0;
    for (std::size_t k = work.size() - 1; k-- > 0;) {
      carry = carry * r + work[k + 1];
      q[k] = carry;
    }
    work = std::move(q);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

template <std::size_t N>
std::array<double, N> eigenvalues(const Matrix<N>& m) {
  const std::vector<double> r = real_roots(characteristic_polynomial(m));
  std::array<double, N> out{};
  std::copy(r.begin(), r.end(), out.begin());
  return out;
}

namespace {

Complex cofactor_det(const std::vector<Complex>& a, std::size_t n) {
  if (n == 1) return a[0];
  if (n == 2) return a[0] * a[3] - a[1] * a[2];
  Complex det = 0.0;
  std::vector<Complex> minor((n - 1) * (n - 1));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t w = 0;
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) minor[w++] = a[r * n + c];
    const Complex term = a[col] * cofactor_det(minor, n - 1);
    det += (col % 2 == 0) ? term : -term;
  }
  return det;
}

}  // namespace

template <std::size_t N>
Complex determinant(const Matrix<N>& m) {
  return cofactor_det(std::vector<Complex>(m.data().begin(), m.data().end()),
                      N);
}

template std::vector<double> characteristic_polynomial(const Matrix<2>&);
template std::vector<double> characteristic_polynomial(const Matrix<4>&);
template std::vector<double> characteristic_polynomial(const Matrix<8>&);
template std::array<double, 2> eigenvalues(const Matrix<2>&);
template std::array<double, 4> eigenvalues(const Matrix<4>&);
template std::array<double, 8> eigenvalues(const Matrix<8>&);
template Complex determinant(const Matrix<2>&);
template Complex determinant(const Matrix<4>&);
template Complex determinant(const Matrix<8>&);

}  // namespace tripent::oracle
