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
#include "tripent/oracle.hpp"
#include "tripent/states.hpp"

using namespace tripent;

TEST_CASE("kind names round trip") {
  for (ReductionKind k : kAllReductions) CHECK(parse_kind(kind_name(k)) == k);
  CHECK(kind_name(ReductionKind::B_CA) == "b-ca");
  CHECK_FALSE(parse_kind("abc").has_value());
  CHECK_FALSE(parse_kind("").has_value());
}

TEST_CASE("every reduction matches the reference contraction") {
  for (std::uint64_t s = 1; s <= 30; ++s) {
    const Matrix8 rho = random_density(s).matrix();
    for (ReductionKind k : kAllReductions)
      CHECK(max_abs_diff(reduce_entries(rho, k), ref::reduce(rho, k)) <= 1e-15);
  }
}

TEST_CASE("special_reduction refuses ordinary kinds") {
  try {
    special_reduction(ghz(), ReductionKind::AB);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidInput);
  }
}

TEST_CASE("GHZ: special reductions are Bell projectors") {
  const EntanglementReport rep = entanglement_criterion(ghz());
  CHECK(rep.verdict == Verdict::Entangled);
  CHECK(rep.witnesses == std::vector<ReductionKind>(kSpecialReductions.begin(),
                                                    kSpecialReductions.end()));
  for (ReductionKind k : kSpecialReductions) {
    CHECK(max_abs_diff(rep[k].reduction.matrix(), ref::bell_projector()) < 1e-15);
    CHECK(std::abs(rep[k].min_pt_eigenvalue + 0.5) < 1e-12);
  }
  for (ReductionKind k : {ReductionKind::AB, ReductionKind::AC, ReductionKind::BC}) {
    CHECK(rep[k].min_pt_eigenvalue >= -1e-12);
    CHECK_FALSE(rep.is_witness(k));
  }
}

TEST_CASE("Werner family spectrum and threshold") {
  for (double x : {0.0, 0.25, 1.0 / 3.0, 0.5, 0.75, 1.0}) {
    const auto spec = ppt_spectrum(reduce(werner_embedded(x), ReductionKind::A_BC));
    const auto expect = ref::werner_pt_spectrum(x);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(spec[i] - expect[i]) < 1e-12);
  }
  CHECK(entanglement_criterion(werner_embedded(1.0 / 3.0 - 1e-6)).verdict ==
        Verdict::Inconclusive);
  CHECK(entanglement_criterion(werner_embedded(1.0 / 3.0 + 1e-6)).verdict ==
        Verdict::Entangled);
}

TEST_CASE("the tolerance decides borderline verdicts") {
  const DensityMatrix8 rho = werner_embedded(1.0 / 3.0 + 1e-6);  // lambda ~ -7.5e-7
  CHECK(entanglement_criterion(rho, 1e-10).verdict == Verdict::Entangled);
  const EntanglementReport loose = entanglement_criterion(rho, 1e-5);
  CHECK(loose.verdict == Verdict::Inconclusive);
  CHECK(loose.tolerance == 1e-5);
}

TEST_CASE("verdict is Entangled exactly when some kind is a witness") {
  for (std::uint64_t s = 1; s <= 40; ++s) {
    const EntanglementReport rep = entanglement_criterion(random_density(s));
    REQUIRE(rep.per_reduction.size() == 6);
    bool any = false;
    for (const ReductionResult& r : rep.per_reduction) {
      const bool w = r.min_pt_eigenvalue < -rep.tolerance;
      CHECK(rep.is_witness(r.kind) == w);
      any = any || w;
    }
    CHECK((rep.verdict == Verdict::Entangled) == any);
    CHECK(rep.witnesses.empty() == !any);
  }
}

TEST_CASE("PT minimum agrees with the oracle on molecule reductions") {
  const DensityMatrix8 rho = molecule_state({0.25, 0.25, 0.5});
  for (ReductionKind k : kAllReductions) {
    const Matrix4 sigma = ref::reduce(rho.matrix(), k);
    const double o = oracle::eigenvalues(ref::partial_transpose(sigma))[0];
    CHECK(std::abs(ppt_min_eigenvalue(reduce(rho, k)) - o) < 1e-10);
  }
}

TEST_CASE("UPB state passes every PPT test") {
  const EntanglementReport rep = entanglement_criterion(upb_state());
  CHECK(rep.verdict == Verdict::Inconclusive);
  for (const ReductionResult& r : rep.per_reduction) CHECK(r.min_pt_eigenvalue >= -1e-10);
}

TEST_CASE("pure pair decomposition") {
  SUBCASE("GHZ: all weight in the plain term") {
    std::array<Complex, 8> c{};
    c[0] = c[7] = 1.0 / std::sqrt(2.0);
    const PureState3 psi(c);
    for (ReductionKind k : kSpecialReductions) {
      const PairDecomposition d = pure_pair_decomposition(psi, k);
      CHECK(d.weight_plain == doctest::Approx(1.0));
      CHECK(d.weight_flipped == 0.0);
      CHECK_FALSE(d.state_flipped.has_value());
      REQUIRE(d.state_plain.has_value());
      CHECK(max_abs_diff(d.state_plain->matrix(), ref::bell_projector()) < 1e-15);
    }
  }
  SUBCASE("|011>: A|BC keeps it plain, B|CA and C|AB flip it") {
    std::array<Complex, 8> c{};
    c[3] = 1.0;
    const PureState3 psi(c);
    CHECK(pure_pair_decomposition(psi, ReductionKind::A_BC).weight_plain == 1.0);
    CHECK(pure_pair_decomposition(psi, ReductionKind::B_CA).weight_flipped == 1.0);
    CHECK(pure_pair_decomposition(psi, ReductionKind::C_AB).weight_flipped == 1.0);
  }
  SUBCASE("random states reconstruct") {
    for (std::uint64_t s = 1; s <= 30; ++s) {
      const PureState3 psi = random_pure(s);
      const Matrix8 rho = pure_to_density(psi).matrix();
      for (ReductionKind k : kSpecialReductions) {
        const PairDecomposition d = pure_pair_decomposition(psi, k);
        CHECK(max_abs_diff(d.reconstruct(), ref::reduce(rho, k)) < 1e-12);
        CHECK(d.weight_plain + d.weight_flipped == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }
  CHECK_THROWS_AS(pure_pair_decomposition(random_pure(1), ReductionKind::AC), Error);
}

TEST_CASE("separable mixtures are never flagged") {
  for (std::uint64_t s = 1; s <= 100; ++s)
    CHECK(entanglement_criterion(random_separable(s, 1 + int(s % 8)).state).verdict ==
          Verdict::Inconclusive);
}
