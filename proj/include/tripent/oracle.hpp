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
#include <vector>

#include "tripent/matrix.hpp"

/// Reference computations that share no code with the Jacobi eigensolver.
/// Used by the verification harness and the tests to cross-check it.
namespace tripent::oracle {

/// Coefficients of det(lambda I - M), lowest degree first (size N+1, leading
/// coefficient 1), by the Faddeev-LeVerrier recursion. Imaginary parts are
/// dropped, so `m` should be Hermitian.
template <std::size_t N>
std::vector<double> characteristic_polynomial(const Matrix<N>& m);

/// All roots of a real-rooted polynomial (coefficients lowest degree first),
/// ascending. Complex Laguerre iteration from below the smallest root, then
/// deflation; a root is polished against the original polynomial only when
/// the polish stays close. Real parts are returned. Roots of multiplicity m
/// are accurate to roughly eps^(1/m).
std::vector<double> real_roots(const std::vector<double>& coeffs);

/// Eigenvalues of a Hermitian matrix via its characteristic polynomial.
template <std::size_t N>
std::array<double, N> eigenvalues(const Matrix<N>& m);

/// Determinant by cofactor expansion.
template <std::size_t N>
Complex determinant(const Matrix<N>& m);

}  // namespace tripent::oracle
