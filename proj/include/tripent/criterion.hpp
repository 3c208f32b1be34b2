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
#include <optional>
#include <string_view>
#include <vector>

#include "tripent/linalg.hpp"
#include "tripent/states.hpp"

namespace tripent {

/// The six two-qubit reductions of a three-qubit state.
///
/// AB, AC and BC are ordinary partial traces. A_BC, B_CA and C_AB are the
/// special reductions: the first factor is the named qubit, the second is a
/// "parity" qubit built from the other two, e.g.
///   [rho_(A,BC)]_{ij,rs} = [rho]_{ijj,rss} + [rho]_{ij(1-j),rs(1-s)}.
enum class ReductionKind { AB, AC, BC, A_BC, B_CA, C_AB };

inline constexpr std::array<ReductionKind, 6> kAllReductions = {
    ReductionKind::AB,   ReductionKind::AC,   ReductionKind::BC,
    ReductionKind::A_BC, ReductionKind::B_CA, ReductionKind::C_AB};

inline constexpr std::array<ReductionKind, 3> kSpecialReductions = {
    ReductionKind::A_BC, ReductionKind::B_CA, ReductionKind::C_AB};

constexpr bool is_special(ReductionKind k) {
  return k == ReductionKind::A_BC || k == ReductionKind::B_CA ||
         k == ReductionKind::C_AB;
}

/// Command-line spelling: ab, ac, bc, a-bc, b-ca, c-ab.
std::string_view kind_name(ReductionKind k);
std::optional<ReductionKind> parse_kind(std::string_view name);

/// Raw index contraction, no validation. Linear in rho.
Matrix4 reduce_entries(const Matrix8& rho, ReductionKind kind);

/// Special reduction (A_BC, B_CA or C_AB) of a density matrix.
///
/// Throws Error(InvalidInput) for an ordinary kind, Error(LemmaViolation) if
/// the result is not a density matrix (which cannot happen for a valid rho).
DensityMatrix4 special_reduction(const DensityMatrix8& rho, ReductionKind kind);

/// Any of the six reductions.
DensityMatrix4 reduce(const DensityMatrix8& rho, ReductionKind kind);

/// Smallest eigenvalue of the partial transpose. For two qubits it is
/// negative iff the state is entangled.
double ppt_min_eigenvalue(const DensityMatrix4& sigma);

/// Full PT spectrum, ascending.
std::array<double, 4> ppt_spectrum(const DensityMatrix4& sigma);

inline constexpr double kCriterionTolerance = 1e-10;

enum class Verdict { Entangled, Inconclusive };

struct ReductionResult {
  ReductionKind kind;
  DensityMatrix4 reduction;
  double min_pt_eigenvalue;
};

/// Result of the six-way PPT test. The test is only sufficient for
/// entanglement: Inconclusive never means separable.
struct EntanglementReport {
  std::vector<ReductionResult> per_reduction;  // kAllReductions order
  Verdict verdict = Verdict::Inconclusive;
  std::vector<ReductionKind> witnesses;  // kinds with eigenvalue < -tolerance
  double tolerance = kCriterionTolerance;

  const ReductionResult& operator[](ReductionKind k) const;
  bool is_witness(ReductionKind k) const;
};

/// Compute all six reductions, PPT-test each (no short-circuit), and report
/// Entangled with every witnessing kind if any PT eigenvalue is < -tol.
EntanglementReport entanglement_criterion(const DensityMatrix8& rho,
                                          double tol = kCriterionTolerance);

/// rho_(X,YZ) of a pure state split into the two pure terms it is a mixture
/// of: the "plain" amplitudes (c_mnn for A_BC) and the "flipped" ones
/// (c_mn(1-n)). A term with zero weight has no state.
struct PairDecomposition {
  double weight_plain = 0.0;
  std::optional<DensityMatrix4> state_plain;
  double weight_flipped = 0.0;
  std::optional<DensityMatrix4> state_flipped;

  /// weight_plain * state_plain + weight_flipped * state_flipped
  Matrix4 reconstruct() const;
};

/// Throws Error(InvalidInput) for an ordinary kind.
PairDecomposition pure_pair_decomposition(const PureState3& psi,
                                          ReductionKind kind);

}  // namespace tripent
