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

#include <cstdint>
#include <random>

#include "tripent/matrix.hpp"

namespace tripent {

/// The repository's single pseudo-random source.
///
/// std::mt19937_64 has a fixed output sequence across standard libraries, but
/// the std distributions do not, so the uniform, Gaussian and exponential
/// draws are derived from the raw 64-bit words here. Same seed, same values.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in (0, 1], 53 bits of resolution.
  double uniform() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller (both variates used).
  double gaussian();

  /// Standard complex Gaussian: independent N(0,1) real and imaginary parts.
  Complex complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

  /// Exponential with unit rate.
  double exponential();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace tripent
