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
#include <optional>
#include <string>
#include <vector>

#include "tripent/states.hpp"

namespace tripent::verify {

/// One named, reproducible check. `passed` is max |observed - expected| <=
/// tolerance, elementwise. Inequalities are encoded either as clamped values
/// (observed = min(0, lambda), expected 0) or as 0/1 indicators with
/// tolerance 0; `note` then carries the raw numbers.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::vector<double> observed;
  std::vector<double> expected;
  double tolerance = 0.0;
  std::optional<std::uint64_t> seed;
  std::string note;
};

CheckResult make_check(std::string name, std::vector<double> observed,
                       std::vector<double> expected, double tolerance,
                       std::optional<std::uint64_t> seed = std::nullopt,
                       std::string note = {});

/// GHZ: ordinary reductions PPT, special reductions equal Bell projectors
/// with PT minimum -1/2, verdict Entangled.
std::vector<CheckResult> check_example1();

/// {0, 0.1, ..., 1} together with 1/3 and 1/3 +- 1e-6.
std::vector<double> default_x_grid();

/// Werner family: PT spectrum of rho_(A,BC) is {(1-3x)/4, (1+x)/4 x3} and
/// the verdict flips exactly above x = 1/3.
std::vector<CheckResult> check_example2(const std::vector<double>& x_grid);

/// All six embeddings of Werner(0.9), plus a seeded local-unitary rotation of
/// it, round-trip through the matching reduction and are detected by it;
/// embeddings of I/4 stay Inconclusive.
std::vector<CheckResult> check_embeddings(std::uint64_t seed);

/// Every (p_ab, p_bc, p_ac) with entries in {0, 1/4, 1/3, 1/2, 1} summing
/// to 1.
std::vector<MoleculeParams> default_molecule_grid();

std::vector<CheckResult> check_example3(const std::vector<MoleculeParams>& grid);

/// UPB state: orthonormal vectors, all six reductions PPT, Inconclusive
/// (the state is entangled nonetheless; this is the known blind spot).
std::vector<CheckResult> check_counterexample();

/// Soundness on separable mixtures, density-ness of all reductions of random
/// states, linearity, the pure-state pair decomposition and the product-state
/// factorisation, over seeds first_seed .. first_seed + count - 1.
std::vector<CheckResult> run_property_suite(std::uint64_t first_seed,
                                            std::uint64_t count);

/// Jacobi vs characteristic-polynomial oracle on random Hermitian 4x4
/// matrices, trace/determinant identities, and PT involution.
std::vector<CheckResult> check_numerics(std::uint64_t first_seed,
                                        std::uint64_t count);

inline constexpr std::uint64_t kDefaultSeeds = 1000;
inline constexpr std::uint64_t kNumericsSamples = 500;

/// Everything above with the default grids; `seeds` sizes the property suite
/// and caps the numerics sample at kNumericsSamples.
std::vector<CheckResult> run_all(std::uint64_t seeds = kDefaultSeeds);

/// {"checks": [...], "failed": n, "passed": n, "total": n}, keys sorted.
std::string to_json(const std::vector<CheckResult>& results);

}  // namespace tripent::verify
