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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tripent/linalg.hpp"

namespace tripent {

/// On-disk matrix: a JSON document
///
///   {
///     "basis": "ABC",
///     "dim": 8,
///     "entries": [[[re, im], ...], ...],
///     "label": "ghz"
///   }
///
/// "ABC" (index 4i+2j+k) goes with dim 8, "XY" (index 2m+n) with dim 4;
/// "label" is optional. Reals are written as the shortest decimal that parses
/// back to the same double, so a write/read cycle is bit-exact.
struct MatrixFile {
  int dim = 0;
  std::vector<Complex> entries;  // row-major, dim*dim
  std::string basis;
  std::optional<std::string> label;
};

/// Throws Error(Parse) on malformed JSON, wrong shapes, non-finite values or
/// a basis tag that does not match the dimension.
MatrixFile parse_matrix_file(std::string_view text);

/// Stable layout: sorted keys, one matrix row per line, trailing newline.
std::string serialize(const MatrixFile& file);

MatrixFile to_matrix_file(const Matrix8& m, std::optional<std::string> label = {});
MatrixFile to_matrix_file(const Matrix4& m, std::optional<std::string> label = {});

/// Throws Error(Parse) if the file's dimension is not N.
template <std::size_t N>
Matrix<N> to_matrix(const MatrixFile& file);

/// Tolerance applied when a file is used as a state (Hermitian, trace, PSD).
inline constexpr double kFileStateTolerance = 1e-8;

}  // namespace tripent
