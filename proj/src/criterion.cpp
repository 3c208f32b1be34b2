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

#include "tripent/criterion.hpp"

#include <algorithm>
#include <cmath>

#include "tripent/error.hpp"

namespace tripent {

namespace {

// Three-qubit index of reduction basis state |i_X j_Y> for a special kind;
// `flip` selects the anti-diagonal copy of the parity qubit.
std::size_t special_index(ReductionKind kind, std::size_t i, std::size_t j,
                          std::size_t flip) {
  switch (kind) {
    case ReductionKind::A_BC: return 4 * i + 2 * j + (j ^ flip);
    case ReductionKind::B_CA: return 4 * (j ^ flip) + 2 * i + j;
    case ReductionKind::C_AB: return 4 * j + 2 * (j ^ flip) + i;
    default: break;
  }
  throw Error(ErrorCode::InvalidInput,
              std::string("not a special reduction: ") +
                  std::string(kind_name(kind)));
}

void require_special(ReductionKind kind) {
  if (!is_special(kind))
    throw Error(ErrorCode::InvalidInput,
                std::string("not a special reduction: ") +
                    std::string(kind_name(kind)));
}

}  // namespace

std::string_view kind_name(ReductionKind k) {
  switch (k) {
    case ReductionKind::AB: return "ab";
    case ReductionKind::AC: return "ac";
    case ReductionKind::BC: return "bc";
    case ReductionKind::A_BC: return "a-bc";
    case ReductionKind::B_CA: return "b-ca";
    case ReductionKind::C_AB: return "c-ab";
  }
  return "?";
}

std::optional<ReductionKind> parse_kind(std::string_view name) {
  for (ReductionKind k : kAllReductions)
    if (kind_name(k) == name) return k;
  return std::nullopt;
}

Matrix4 reduce_entries(const Matrix8& rho, ReductionKind kind) {
  switch (kind) {
    case ReductionKind::AB: return partial_trace(rho, Subsystem::C);
    case ReductionKind::AC: return partial_trace(rho, Subsystem::B);
    case ReductionKind::BC: return partial_trace(rho, Subsystem::A);
    default: break;
  }
  Matrix4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t s = 0; s < 2; ++s)
          out(2 * i + j, 2 * r + s) =
              rho(special_index(kind, i, j, 0), special_index(kind, r, s, 0)) +
              rho(special_index(kind, i, j, 1), special_index(kind, r, s, 1));
  return out;
}

DensityMatrix4 special_reduction(const DensityMatrix8& rho,
                                 ReductionKind kind) {
  require_special(kind);
  const Matrix4 out = reduce_entries(rho.matrix(), kind);
  try {
    return DensityMatrix4::validated(out);
  } catch (const Error& e) {
    throw Error(ErrorCode::LemmaViolation,
                std::string(kind_name(kind)) + " reduction: " + e.what());
  }
}

DensityMatrix4 reduce(const DensityMatrix8& rho, ReductionKind kind) {
  if (is_special(kind)) return special_reduction(rho, kind);
  return DensityMatrix4::validated(reduce_entries(rho.matrix(), kind));
}

std::array<double, 4> ppt_spectrum(const DensityMatrix4& sigma) {
  return hermitian_eigenvalues(partial_transpose_second(sigma.matrix()));
}

double ppt_min_eigenvalue(const DensityMatrix4& sigma) {
  return ppt_spectrum(sigma)[0];
}

const ReductionResult& EntanglementReport::operator[](ReductionKind k) const {
  for (const ReductionResult& r : per_reduction)
    if (r.kind == k) return r;
  throw Error(ErrorCode::InvalidInput, "report has no entry for " +
                                           std::string(kind_name(k)));
}

bool EntanglementReport::is_witness(ReductionKind k) const {
  return std::find(witnesses.begin(), witnesses.end(), k) != witnesses.end();
}

EntanglementReport entanglement_criterion(const DensityMatrix8& rho,
                                          double tol) {
  if (!(tol >= 0.0) || !std::isfinite(tol))
    throw Error(ErrorCode::ParamOutOfRange, "tolerance must be finite and >= 0");
  EntanglementReport report;
  report.tolerance = tol;
  report.per_reduction.reserve(kAllReductions.size());
  for (ReductionKind kind : kAllReductions) {
    DensityMatrix4 sigma = reduce(rho, kind);
    const double lambda = ppt_min_eigenvalue(sigma);
    report.per_reduction.push_back({kind, std::move(sigma), lambda});
    if (lambda < -tol) report.witnesses.push_back(kind);
  }
  report.verdict =
      report.witnesses.empty() ? Verdict::Inconclusive : Verdict::Entangled;
  return report;
}

Matrix4 PairDecomposition::reconstruct() const {
  Matrix4 out;
  if (state_plain) out += weight_plain * state_plain->matrix();
  if (state_flipped) out += weight_flipped * state_flipped->matrix();
  return out;
}

PairDecomposition pure_pair_decomposition(const PureState3& psi,
                                          ReductionKind kind) {
  require_special(kind);
  const auto& c = psi.amplitudes();

  auto term = [&](std::size_t flip, double& weight,
                  std::optional<DensityMatrix4>& state) {
    std::array<Complex, 4> phi{};
    weight = 0.0;
    for (std::size_t m = 0; m < 2; ++m)
      for (std::size_t n = 0; n < 2; ++n) {
        phi[2 * m + n] = c[special_index(kind, m, n, flip)];
        weight += std::norm(phi[2 * m + n]);
      }
    if (weight == 0.0) return;
    const double eta = std::sqrt(weight);
    for (Complex& z : phi) z /= eta;
    state = DensityMatrix4::validated(Matrix4::outer(phi));
  };

  PairDecomposition d;
  term(0, d.weight_plain, d.state_plain);
  term(1, d.weight_flipped, d.state_flipped);
  return d;
}

}  // namespace tripent
