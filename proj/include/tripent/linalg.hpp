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

#include <array>
#include <cstddef>
#include <string>

#include "tripent/matrix.hpp"

namespace tripent {

/// Entrywise Hermiticity tolerance used throughout.
inline constexpr double kHermitianTolerance = 1e-12;
/// |trace - 1| tolerance for density matrices.
inline constexpr double kTraceTolerance = 1e-10;
/// Smallest eigenvalue a density matrix may have.
inline constexpr double kPsdTolerance = 1e-10;

/// Jacobi stopping rule: off-diagonal Frobenius norm below this (relative to
/// max(1, ||M||_F)), or the sweep limit.
inline constexpr double kJacobiOffDiagonalThreshold = 1e-14;
inline constexpr int kJacobiMaxSweeps = 100;

/// Eigenvalues of a Hermitian matrix in ascending order, by cyclic complex
/// Jacobi rotations on the Hermitian part of `m`.
///
/// Throws Error(NonHermitian) if any |m[a][b] - conj(m[b][a])| exceeds
/// `hermitian_tol`, Error(InvalidInput) on non-finite entries.
template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(
    const Matrix<N>& m, double hermitian_tol = kHermitianTolerance);

/// Transpose on the second tensor factor:
/// out[2m+n][2r+s] = in[2m+s][2r+n].
Matrix4 partial_transpose_second(const Matrix4& m);

enum class Subsystem { A, B, C };

/// Trace out one qubit of a tripartite matrix. The remaining two keep their
/// A < B < C order, e.g. tracing C gives
/// out[2i+j][2r+s] = sum_k rho[4i+2j+k][4r+2s+k].
Matrix4 partial_trace(const Matrix8& rho, Subsystem traced);

/// out[2m+n][2r+s] = x[m][r] * y[n][s]
Matrix4 kron(const Matrix2& x, const Matrix2& y);

/// Outcome of the three density-matrix checks.
struct DensityDiagnostics {
  bool finite = true;
  bool hermitian = false;
  bool unit_trace = false;
  bool positive = false;
  double hermiticity_error = 0.0;
  double trace_error = 0.0;      // |tr(M) - 1|, complex modulus
  double min_eigenvalue = 0.0;   // of the Hermitian part; NaN if not evaluated

  bool ok() const { return finite && hermitian && unit_trace && positive; }
  /// One line naming every failed check and its magnitude.
  std::string describe() const;
};

/// Tolerances for the Hermitian, trace and PSD checks.
struct DensityTolerances {
  double hermitian = kHermitianTolerance;
  double trace = kTraceTolerance;
  double psd = kPsdTolerance;

  static constexpr DensityTolerances uniform(double tol) {
    return {tol, tol, tol};
  }
};

template <std::size_t N>
DensityDiagnostics check_density(const Matrix<N>& m,
                                 const DensityTolerances& tol = {});

/// True iff Hermitian within tol, |trace - 1| <= tol, min eigenvalue >= -tol.
template <std::size_t N>
bool is_density_matrix(const Matrix<N>& m, double tol,
                       DensityDiagnostics* diagnostics = nullptr);

/// A matrix that passed check_density. The stored entries are the exact
/// Hermitian part of the input.
template <std::size_t N>
class DensityMatrix {
 public:
  /// Throws Error(InvalidInput) with diagnostics if `m` fails the checks.
  static DensityMatrix validated(const Matrix<N>& m,
                                 const DensityTolerances& tol = {});

  const Matrix<N>& matrix() const { return m_; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return m_(r, c);
  }

  friend bool operator==(const DensityMatrix&, const DensityMatrix&) = default;

 private:
  explicit DensityMatrix(const Matrix<N>& m) : m_(m) {}
  Matrix<N> m_;
};

using DensityMatrix4 = DensityMatrix<4>;
using DensityMatrix8 = DensityMatrix<8>;

/// Density-typed overloads.
DensityMatrix4 partial_trace(const DensityMatrix8& rho, Subsystem traced);

}  // namespace tripent
