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

#include <cmath>

#include "doctest.h"
#include "reference.hpp"
#include "tripent/criterion.hpp"
#include "tripent/error.hpp"
#include "tripent/states.hpp"

using namespace tripent;

namespace {

template <typename F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidInput;
}

constexpr ReductionKind kSlotKind[] = {ReductionKind::A_BC, ReductionKind::B_CA,
                                       ReductionKind::C_AB, ReductionKind::AB,
                                       ReductionKind::AC,   ReductionKind::BC};

const double kH = 1.0 / std::sqrt(2.0);

}  // namespace

TEST_CASE("GHZ projector") {
  const Matrix8 g = ghz().matrix();
  CHECK(g(0, 0).real() == doctest::Approx(0.5));
  CHECK(g(0, 7).real() == doctest::Approx(0.5));
  CHECK(g(7, 0).real() == doctest::Approx(0.5));
  CHECK(g(7, 7).real() == doctest::Approx(0.5));
  CHECK(std::abs(g.trace() - 1.0) < 1e-15);
  CHECK(max_abs_diff(g * g, g) < 1e-15);
}

TEST_CASE("pure states must be normalised") {
  std::array<Complex, 8> c{};
  c[0] = 1.0;
  CHECK_NOTHROW(PureState3{c});
  c[1] = 0.1;
  CHECK(error_of([&] { PureState3{c}; }) == ErrorCode::NotNormalized);
  CHECK(error_of([] { ProductPureState({1.0, 1.0}, {1.0, 0.0}, {1.0, 0.0}); }) ==
        ErrorCode::NotNormalized);
}

TEST_CASE("Werner states") {
  CHECK(werner_state(0.0).matrix() == 0.25 * Matrix4::identity());
  CHECK(max_abs_diff(werner_embedded(0.0).matrix(), 0.125 * Matrix8::identity()) == 0.0);
  for (double x : {0.0, 0.2, 0.5, 1.0}) {
    const Matrix4 r = ref::reduce(werner_embedded(x).matrix(), ReductionKind::A_BC);
    CHECK(max_abs_diff(r, werner_state(x).matrix()) < 1e-15);
  }
  CHECK(error_of([] { werner_embedded(-0.01); }) == ErrorCode::ParamOutOfRange);
  CHECK(error_of([] { werner_embedded(1.01); }) == ErrorCode::ParamOutOfRange);
  CHECK(error_of([] { werner_state(2.0); }) == ErrorCode::ParamOutOfRange);
}

TEST_CASE("embedding round trips through the matching reduction") {
  const DensityMatrix4 states[] = {werner_state(0.9), werner_state(0.2),
                                   DensityMatrix4::validated(ref::bell_projector())};
  for (const DensityMatrix4& r : states)
    for (int slot = 1; slot <= 6; ++slot) {
      const DensityMatrix8 rho = embed_bipartite(r, slot);
      CHECK(max_abs_diff(ref::reduce(rho.matrix(), kSlotKind[slot - 1]), r.matrix()) <= 1e-14);
      CHECK(rho.matrix().trace().real() == doctest::Approx(1.0));
    }
  CHECK(error_of([] { embed_bipartite(werner_state(0.5), 0); }) == ErrorCode::InvalidSlot);
  CHECK(error_of([] { embed_bipartite(werner_state(0.5), 7); }) == ErrorCode::InvalidSlot);
}

TEST_CASE("molecule states") {
  SUBCASE("single pair gives a pure state") {
    for (MoleculeParams p : {MoleculeParams{1, 0, 0}, MoleculeParams{0, 1, 0},
                             MoleculeParams{0, 0, 1}}) {
      const Matrix8 rho = molecule_state(p).matrix();
      CHECK(max_abs_diff(rho * rho, rho) < 1e-15);
    }
  }
  SUBCASE("AB pair amplitudes") {
    const Matrix8 rho = molecule_state({1, 0, 0}).matrix();
    // (|010> + |100>)/sqrt2
    CHECK(rho(2, 2).real() == doctest::Approx(0.5));
    CHECK(rho(4, 4).real() == doctest::Approx(0.5));
    CHECK(rho(2, 4).real() == doctest::Approx(0.5));
  }
  SUBCASE("invalid mixing weights") {
    CHECK(error_of([] { molecule_state({0.5, 0.6, 0.0}); }) == ErrorCode::ParamOutOfRange);
    CHECK(error_of([] { molecule_state({-0.5, 1.5, 0.0}); }) == ErrorCode::ParamOutOfRange);
  }
}

TEST_CASE("UPB vectors are orthonormal products and the state is a density matrix") {
  const auto v = upb_vectors();
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      Complex ip = 0.0;
      for (std::size_t k = 0; k < 8; ++k) ip += std::conj(v[a][k]) * v[b][k];
      CHECK(std::abs(ip - (a == b ? 1.0 : 0.0)) < 1e-12);
    }
  // |0,1,+>
  CHECK(std::abs(v[0][2] - kH) < 1e-15);
  CHECK(std::abs(v[0][3] - kH) < 1e-15);
  const Matrix8 rho = upb_state().matrix();
  CHECK(max_abs_diff(rho * rho, 0.25 * rho) < 1e-15);  // projector / 4
}

TEST_CASE("product states and mixtures") {
  const ProductPureState s({1.0, 0.0}, {kH, kH}, {0.0, 1.0});
  const Matrix8 p = product_pure(s).matrix();
  // |0>|+>|1>: amplitudes at |001> and |011>
  CHECK(p(1, 1).real() == doctest::Approx(0.5));
  CHECK(p(1, 3).real() == doctest::Approx(0.5));
  CHECK(p(3, 3).real() == doctest::Approx(0.5));

  const ProductPureState t({0.0, 1.0}, {1.0, 0.0}, {1.0, 0.0});
  const SeparableEnsemble e({{0.25, s}, {0.75, t}});
  const Matrix8 m = mixture(e);
  CHECK(m == 0.25 * product_pure(s).matrix() + 0.75 * product_pure(t).matrix());

  CHECK(error_of([&] { SeparableEnsemble({{0.5, s}}); }) == ErrorCode::ParamOutOfRange);
  CHECK(error_of([&] { SeparableEnsemble({{-0.5, s}, {1.5, t}}); }) ==
        ErrorCode::ParamOutOfRange);
  CHECK(error_of([] { SeparableEnsemble({}); }) == ErrorCode::InvalidInput);
}

TEST_CASE("random constructors are deterministic and valid") {
  CHECK(random_density(7) == random_density(7));
  CHECK_FALSE(random_density(7) == random_density(8));
  CHECK(random_pure(3).amplitudes() == random_pure(3).amplitudes());

  const SeparableSample a = random_separable(11, 5);
  const SeparableSample b = random_separable(11, 5);
  CHECK(a.state == b.state);
  CHECK(a.ensemble.terms().size() == 5);
  double total = 0.0;
  for (const EnsembleTerm& t : a.ensemble.terms()) {
    CHECK(t.weight >= 0.0);
    total += t.weight;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(max_abs_diff(a.state.matrix(), mixture(a.ensemble)) < 1e-15);

  CHECK(error_of([] { random_separable(1, 0); }) == ErrorCode::ParamOutOfRange);
  CHECK(error_of([] { random_separable(1, kMaxEnsembleSize + 1); }) ==
        ErrorCode::ParamOutOfRange);

  for (std::uint64_t s = 1; s <= 20; ++s)
    CHECK(is_density_matrix(random_density(s).matrix(), 1e-12));
}

TEST_CASE("random qubits are normalised") {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const Qubit q = random_qubit(rng);
    CHECK(std::norm(q[0]) + std::norm(q[1]) == doctest::Approx(1.0).epsilon(1e-14));
  }
}
