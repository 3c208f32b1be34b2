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

// Straight-from-the-definition reference implementations for the tests.
// Everything here is written in terms of qubit bits, not flat indices, and
// shares no code with the library.

#include <array>
#include <cmath>
#include <complex>

#include "tripent/criterion.hpp"
#include "tripent/matrix.hpp"

namespace ref {

using tripent::Complex;
using tripent::Matrix4;
using tripent::Matrix8;
using tripent::ReductionKind;

inline Complex at8(const Matrix8& m, int a, int b, int c, int r, int s, int t) {
  return m(4 * a + 2 * b + c, 4 * r + 2 * s + t);
}

inline Complex& at4(Matrix4& m, int a, int b, int r, int s) {
  return m(2 * a + b, 2 * r + s);
}

inline Matrix4 reduce(const Matrix8& rho, ReductionKind kind) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) {
          Complex v = 0.0;
          switch (kind) {
            case ReductionKind::AB:
              for (int k = 0; k < 2; ++k) v += at8(rho, i, j, k, r, s, k);
              break;
            case ReductionKind::AC:
              for (int k = 0; k < 2; ++k) v += at8(rho, i, k, j, r, k, s);
              break;
            case ReductionKind::BC:
              for (int k = 0; k < 2; ++k) v += at8(rho, k, i, j, k, r, s);
              break;
            case ReductionKind::A_BC:
              v = at8(rho, i, j, j, r, s, s) + at8(rho, i, j, 1 - j, r, s, 1 - s);
              break;
            case ReductionKind::B_CA:
              v = at8(rho, j, i, j, s, r, s) + at8(rho, 1 - j, i, j, 1 - s, r, s);
              break;
            case ReductionKind::C_AB:
              v = at8(rho, j, j, i, s, s, r) + at8(rho, j, 1 - j, i, s, 1 - s, r);
              break;
          }
          at4(out, i, j, r, s) = v;
        }
  return out;
}

// Transpose of the second qubit: swap its row and column bits.
inline Matrix4 partial_transpose(const Matrix4& m) {
  Matrix4 out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s)
          at4(out, a, b, r, s) = m(2 * a + s, 2 * r + b);
  return out;
}

inline double max_abs(const Matrix4& m) {
  double worst = 0.0;
  for (const Complex& z : m.data()) worst = std::max(worst, std::abs(z));
  return worst;
}

// |Phi+><Phi+|
inline Matrix4 bell_projector() {
  Matrix4 m;
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
  return m;
}

// Spectrum of the partial transpose of a Werner state.
inline std::array<double, 4> werner_pt_spectrum(double x) {
  const double low = 0.25 * (1.0 - 3.0 * x);
  const double high = 0.25 * (1.0 + x);
  return {low, high, high, high};
}

}  // namespace ref
