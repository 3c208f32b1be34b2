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

#include "tripent/states.hpp"

#include <cmath>
#include <sstream>

#include "tripent/error.hpp"

namespace tripent {

namespace {

constexpr std::size_t index3(std::size_t i, std::size_t j, std::size_t k) {
  return 4 * i + 2 * j + k;
}

double norm_squared(const Qubit& q) { return std::norm(q[0]) + std::norm(q[1]); }

void require_normalized(double n2, const char* what) {
  if (!(std::abs(n2 - 1.0) <= kNormTolerance)) {
    std::ostringstream os;
    os.precision(17);
    os << what << " is not normalised: squared norm " << n2;
    throw Error(ErrorCode::NotNormalized, os.str());
  }
}

void require_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    std::ostringstream os;
    os << name << " = " << v << " is outside [0, 1]";
    throw Error(ErrorCode::ParamOutOfRange, os.str());
  }
}

}  // namespace

PureState3::PureState3(const std::array<Complex, 8>& amplitudes)
    : c_(amplitudes) {
  double n2 = 0.0;
  for (const Complex& z : c_) n2 += std::norm(z);
  require_normalized(n2, "three-qubit state");
}

ProductPureState::ProductPureState(const Qubit& a, const Qubit& b,
                                   const Qubit& c)
    : a_(a), b_(b), c_(c) {
  require_normalized(norm_squared(a_), "factor a");
  require_normalized(norm_squared(b_), "factor b");
  require_normalized(norm_squared(c_), "factor c");
}

PureState3 ProductPureState::amplitudes() const {
  std::array<Complex, 8> amp{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        amp[index3(i, j, k)] = a_[i] * b_[j] * c_[k];
  return PureState3(amp);
}

SeparableEnsemble::SeparableEnsemble(std::vector<EnsembleTerm> terms)
    : terms_(std::move(terms)) {
  if (terms_.empty())
    throw Error(ErrorCode::InvalidInput, "separable ensemble has no terms");
  double total = 0.0;
  for (const EnsembleTerm& t : terms_) {
    if (!(t.weight >= 0.0))
      throw Error(ErrorCode::ParamOutOfRange, "negative ensemble weight");
    total += t.weight;
  }
  if (!(std::abs(total - 1.0) <= kNormTolerance))
    throw Error(ErrorCode::ParamOutOfRange,
                "ensemble weights do not sum to 1");
}

DensityMatrix8 pure_to_density(const PureState3& psi) {
  return DensityMatrix8::validated(Matrix8::outer(psi.amplitudes()));
}

DensityMatrix8 ghz() {
  const double h = 1.0 / std::sqrt(2.0);
  std::array<Complex, 8> amp{};
  amp[index3(0, 0, 0)] = h;
  amp[index3(1, 1, 1)] = h;
  return pure_to_density(PureState3(amp));
}

DensityMatrix8 werner_embedded(double x) {
  require_unit_interval(x, "x");
  Matrix8 r;
  for (std::size_t d : {index3(0, 1, 0), index3(0, 1, 1), index3(1, 0, 0),
                        index3(1, 0, 1)})
    r(d, d) = 0.25;
  r(index3(0, 1, 0), index3(1, 0, 1)) = -0.25;
  r(index3(0, 1, 1), index3(1, 0, 0)) = -0.25;
  r(index3(1, 0, 0), index3(0, 1, 1)) = -0.25;
  r(index3(1, 0, 1), index3(0, 1, 0)) = -0.25;
  return DensityMatrix8::validated(x * r +
                                   ((1.0 - x) / 8.0) * Matrix8::identity());
}

DensityMatrix4 werner_state(double x) {
  require_unit_interval(x, "x");
  Matrix4 singlet;
  singlet(1, 1) = 0.5;
  singlet(2, 2) = 0.5;
  singlet(1, 2) = -0.5;
  singlet(2, 1) = -0.5;
  return DensityMatrix4::validated(x * singlet +
                                   ((1.0 - x) / 4.0) * Matrix4::identity());
}

DensityMatrix8 embed_bipartite(const DensityMatrix4& r, int slot) {
  if (slot < 1 || slot > 6)
    throw Error(ErrorCode::InvalidSlot,
                "embedding slot " + std::to_string(slot) + " is not in 1..6");

  // For slot-specific (i, j, k) -> row index, with k the "copy" bit: each
  // R entry lands in two places, once per value of the copy bit.
  auto row = [slot](std::size_t i, std::size_t j, std::size_t copy) {
    switch (slot) {
      case 1: return index3(i, j, j ^ copy);
      case 2: return index3(j ^ copy, i, j);
      case 3: return index3(j, j ^ copy, i);
      case 4: return index3(i, j, copy);
      case 5: return index3(i, copy, j);
      default: return index3(copy, i, j);
    }
  };

  Matrix8 rho;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t rr = 0; rr < 2; ++rr)
        for (std::size_t s = 0; s < 2; ++s)
          for (std::size_t copy = 0; copy < 2; ++copy)
            rho(row(i, j, copy), row(rr, s, copy)) =
                0.5 * r(2 * i + j, 2 * rr + s);
  return DensityMatrix8::validated(rho);
}

DensityMatrix8 molecule_state(const MoleculeParams& p) {
  require_unit_interval(p.p_ab, "p_ab");
  require_unit_interval(p.p_bc, "p_bc");
  require_unit_interval(p.p_ac, "p_ac");
  const double total = p.p_ab + p.p_bc + p.p_ac;
  if (!(std::abs(total - 1.0) <= kNormTolerance))
    throw Error(ErrorCode::ParamOutOfRange,
                "molecule probabilities do not sum to 1");

  const double h = 1.0 / std::sqrt(2.0);
  auto pair_projector = [h](std::size_t first, std::size_t second) {
    std::array<Complex, 8> amp{};
    amp[first] = h;
    amp[second] = h;
    return Matrix8::outer(amp);
  };
  // Psi_AB = (|010> + |100>)/sqrt2, Psi_BC = (|001> + |010>)/sqrt2,
  // Psi_AC = (|001> + |100>)/sqrt2.
  const Matrix8 rho =
      p.p_ab * pair_projector(index3(0, 1, 0), index3(1, 0, 0)) +
      p.p_bc * pair_projector(index3(0, 0, 1), index3(0, 1, 0)) +
      p.p_ac * pair_projector(index3(0, 0, 1), index3(1, 0, 0));
  return DensityMatrix8::validated(rho);
}

std::array<std::array<Complex, 8>, 4> upb_vectors() {
  const double h = 1.0 / std::sqrt(2.0);
  const Qubit zero{1.0, 0.0};
  const Qubit one{0.0, 1.0};
  const Qubit plus{h, h};
  const Qubit minus{h, -h};
  auto product = [](const Qubit& a, const Qubit& b, const Qubit& c) {
    std::array<Complex, 8> v{};
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k) v[index3(i, j, k)] = a[i] * b[j] * c[k];
    return v;
  };
  return {product(zero, one, plus), product(one, plus, zero),
          product(plus, zero, one), product(minus, minus, minus)};
}

DensityMatrix8 upb_state() {
  Matrix8 rho = Matrix8::identity();
  for (const auto& v : upb_vectors()) rho -= Matrix8::outer(v);
  return DensityMatrix8::validated(0.25 * rho);
}

DensityMatrix8 product_pure(const ProductPureState& s) {
  return pure_to_density(s.amplitudes());
}

Matrix8 mixture(const SeparableEnsemble& ensemble) {
  Matrix8 rho;
  for (const EnsembleTerm& t : ensemble.terms())
    rho += t.weight * product_pure(t.state).matrix();
  return rho;
}

Qubit random_qubit(Rng& rng) {
  Qubit q{rng.complex_gaussian(), rng.complex_gaussian()};
  const double n = std::sqrt(norm_squared(q));
  q[0] /= n;
  q[1] /= n;
  return q;
}

SeparableSample random_separable(std::uint64_t seed, int k) {
  if (k < 1 || k > kMaxEnsembleSize)
    throw Error(ErrorCode::ParamOutOfRange,
                "ensemble size " + std::to_string(k) + " is not in 1.." +
                    std::to_string(kMaxEnsembleSize));
  Rng rng(seed);
  std::vector<double> weights(static_cast<std::size_t>(k));
  double total = 0.0;
  for (double& w : weights) {
    w = rng.exponential();
    total += w;
  }
  std::vector<EnsembleTerm> terms;
  terms.reserve(weights.size());
  for (double w : weights) {
    const Qubit a = random_qubit(rng);
    const Qubit b = random_qubit(rng);
    const Qubit c = random_qubit(rng);
    terms.push_back({total > 0.0 ? w / total : 1.0 / k, ProductPureState(a, b, c)});
  }
  SeparableEnsemble ensemble(std::move(terms));
  DensityMatrix8 state = DensityMatrix8::validated(mixture(ensemble));
  return {std::move(ensemble), std::move(state)};
}

DensityMatrix8 random_density(std::uint64_t seed) {
  Rng rng(seed);
  Matrix8 g;
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c) g(r, c) = rng.complex_gaussian();
  const Matrix8 ggh = g * g.adjoint();
  return DensityMatrix8::validated((1.0 / ggh.trace().real()) * ggh);
}

PureState3 random_pure(std::uint64_t seed) {
  Rng rng(seed);
  std::array<Complex, 8> amp{};
  double n2 = 0.0;
  for (Complex& z : amp) {
    z = rng.complex_gaussian();
    n2 += std::norm(z);
  }
  const double n = std::sqrt(n2);
  for (Complex& z : amp) z /= n;
  return PureState3(amp);
}

ProductPureState random_product(std::uint64_t seed) {
  Rng rng(seed);
  const Qubit a = random_qubit(rng);
  const Qubit b = random_qubit(rng);
  const Qubit c = random_qubit(rng);
  return ProductPureState(a, b, c);
}

}  // namespace tripent
