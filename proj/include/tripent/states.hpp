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
#include <cstdint>
#include <vector>

#include "tripent/linalg.hpp"
#include "tripent/random.hpp"

namespace tripent {

/// Normalisation tolerance for pure-state amplitudes and mixture weights.
inline constexpr double kNormTolerance = 1e-12;

/// Eight amplitudes c_ijk of a three-qubit pure state, index 4i+2j+k.
class PureState3 {
 public:
  /// Throws Error(NotNormalized) unless sum |c|^2 is within kNormTolerance of 1.
  explicit PureState3(const std::array<Complex, 8>& amplitudes);

  const std::array<Complex, 8>& amplitudes() const { return c_; }
  const Complex& operator()(int i, int j, int k) const {
    return c_[4 * i + 2 * j + k];
  }

 private:
  std::array<Complex, 8> c_;
};

/// A single-qubit pure state a0|0> + a1|1>.
using Qubit = std::array<Complex, 2>;

/// |a> (x) |b> (x) |c>, each factor normalised.
class ProductPureState {
 public:
  /// Throws Error(NotNormalized) if any factor is off by more than
  /// kNormTolerance.
  ProductPureState(const Qubit& a, const Qubit& b, const Qubit& c);

  const Qubit& a() const { return a_; }
  const Qubit& b() const { return b_; }
  const Qubit& c() const { return c_; }

  PureState3 amplitudes() const;

 private:
  Qubit a_, b_, c_;
};

struct EnsembleTerm {
  double weight;
  ProductPureState state;
};

/// Convex mixture of product pure states: a separable decomposition.
class SeparableEnsemble {
 public:
  /// Throws Error(ParamOutOfRange) on negative weights or a weight sum off by
  /// more than kNormTolerance, Error(InvalidInput) on an empty list.
  explicit SeparableEnsemble(std::vector<EnsembleTerm> terms);

  const std::vector<EnsembleTerm>& terms() const { return terms_; }

 private:
  std::vector<EnsembleTerm> terms_;
};

/// Mixing probabilities of the three pair states in molecule_state.
struct MoleculeParams {
  double p_ab = 0.0;
  double p_bc = 0.0;
  double p_ac = 0.0;
};

/// |psi><psi|
DensityMatrix8 pure_to_density(const PureState3& psi);

/// (|000> + |111>)/sqrt2 projector.
DensityMatrix8 ghz();

/// x R + (1 - x) I/8, where R is the embedded singlet: diagonal 1/4 at
/// |010>,|011>,|100>,|101> and -1/4 at (010,101), (011,100), (100,011),
/// (101,010). Its A|BC special reduction is the two-qubit Werner state.
/// Throws Error(ParamOutOfRange) unless 0 <= x <= 1.
DensityMatrix8 werner_embedded(double x);

/// Two-qubit Werner state x |psi-><psi-| + (1 - x) I/4.
DensityMatrix4 werner_state(double x);

/// Lift a two-qubit state into three qubits so that the matching reduction
/// returns it:
///   1: [rho]_{ijj,rss}       = [rho]_{ij(1-j),rs(1-s)} = R_{ij,rs}/2  (A|BC)
///   2: [rho]_{jij,srs}       = [rho]_{(1-j)ij,(1-s)rs} = R_{ij,rs}/2  (B|CA)
///   3: [rho]_{jji,ssr}       = [rho]_{j(1-j)i,s(1-s)r} = R_{ij,rs}/2  (C|AB)
///   4: [rho]_{ij0,rs0}       = [rho]_{ij1,rs1}         = R_{ij,rs}/2  (AB)
///   5: [rho]_{i0j,r0s}       = [rho]_{i1j,r1s}         = R_{ij,rs}/2  (AC)
///   6: [rho]_{0ij,0rs}       = [rho]_{1ij,1rs}         = R_{ij,rs}/2  (BC)
/// All other entries are zero. Throws Error(InvalidSlot) outside 1..6.
DensityMatrix8 embed_bipartite(const DensityMatrix4& r, int slot);

/// sum over rs in {AB, BC, AC} of p_rs |Psi_rs><Psi_rs|, with
/// Psi_rs = (|0_r 1_s> + |1_r 0_s>)/sqrt2 and the remaining qubit in |0>.
/// Throws Error(ParamOutOfRange) unless each p in [0,1] and they sum to 1.
DensityMatrix8 molecule_state(const MoleculeParams& p);

/// The four orthonormal product vectors of the Shifts unextendible product
/// basis: |0,1,+>, |1,+,0>, |+,0,1>, |-,-,->.
std::array<std::array<Complex, 8>, 4> upb_vectors();

/// (I - sum_i |psi_i><psi_i|)/4 over upb_vectors(): a PPT entangled state.
DensityMatrix8 upb_state();

/// |a><a| (x) |b><b| (x) |c><c|
DensityMatrix8 product_pure(const ProductPureState& s);

/// sum_alpha w_alpha product_pure(s_alpha), accumulated in term order.
Matrix8 mixture(const SeparableEnsemble& ensemble);

/// Haar-random qubit: two Gaussians per amplitude, then normalised.
Qubit random_qubit(Rng& rng);

struct SeparableSample {
  SeparableEnsemble ensemble;
  DensityMatrix8 state;
};

inline constexpr int kMaxEnsembleSize = 64;

/// k Haar-random product states with Dirichlet(1,...,1) weights.
/// Throws Error(ParamOutOfRange) unless 1 <= k <= kMaxEnsembleSize.
SeparableSample random_separable(std::uint64_t seed, int k);

/// G G^dagger / tr(G G^dagger) for an 8x8 matrix of complex Gaussians.
DensityMatrix8 random_density(std::uint64_t seed);

/// Haar-random three-qubit pure state (normalised complex Gaussians).
PureState3 random_pure(std::uint64_t seed);

/// Random product state with Haar factors.
ProductPureState random_product(std::uint64_t seed);

}  // namespace tripent
