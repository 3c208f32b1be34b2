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

#include "tripent/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "json.hpp"

#include "tripent/criterion.hpp"
#include "tripent/oracle.hpp"

namespace tripent::verify {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

double flag(bool b) { return b ? 1.0 : 0.0; }

// Clamp so that "lambda >= -tol" reads as |min(0, lambda) - 0| <= tol.
double nonnegative_part(double lambda) { return std::min(0.0, lambda); }

std::vector<double> sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

template <std::size_t N>
std::vector<double> as_vector(const std::array<double, N>& a) {
  return {a.begin(), a.end()};
}

Matrix4 bell_projector() {
  const double h = 1.0 / std::sqrt(2.0);
  return Matrix4::outer({h, 0.0, 0.0, h});
}

Matrix2 haar_unitary(Rng& rng) {
  const Qubit q = random_qubit(rng);
  return Matrix2::from_rows({q[0], -std::conj(q[1]), q[1], std::conj(q[0])});
}

ReductionKind kind_for_slot(int slot) {
  static constexpr ReductionKind kinds[] = {
      ReductionKind::A_BC, ReductionKind::B_CA, ReductionKind::C_AB,
      ReductionKind::AB,   ReductionKind::AC,   ReductionKind::BC};
  return kinds[slot - 1];
}

std::string molecule_label(const MoleculeParams& p) {
  return "p=(" + fmt(p.p_ab) + "," + fmt(p.p_bc) + "," + fmt(p.p_ac) + ")";
}

}  // namespace

CheckResult make_check(std::string name, std::vector<double> observed,
                       std::vector<double> expected, double tolerance,
                       std::optional<std::uint64_t> seed, std::string note) {
  CheckResult r;
  r.name = std::move(name);
  r.tolerance = tolerance;
  r.seed = seed;
  r.note = std::move(note);
  r.passed = observed.size() == expected.size();
  for (std::size_t k = 0; r.passed && k < observed.size(); ++k) {
    const double d = std::abs(observed[k] - expected[k]);
    if (!(d <= tolerance)) r.passed = false;
  }
  r.observed = std::move(observed);
  r.expected = std::move(expected);
  return r;
}

std::vector<CheckResult> check_example1() {
  std::vector<CheckResult> out;
  const DensityMatrix8 rho = ghz();
  const EntanglementReport rep = entanglement_criterion(rho);

  Matrix4 diag_half;
  diag_half(0, 0) = 0.5;
  diag_half(3, 3) = 0.5;
  std::vector<double> ordinary_ppt, ordinary_form;
  for (ReductionKind k : {ReductionKind::AB, ReductionKind::AC, ReductionKind::BC}) {
    ordinary_ppt.push_back(nonnegative_part(rep[k].min_pt_eigenvalue));
    ordinary_form.push_back(max_abs_diff(rep[k].reduction.matrix(), diag_half));
  }
  out.push_back(make_check("example1.ordinary_reductions_ppt", ordinary_ppt,
                           {0.0, 0.0, 0.0}, 1e-10));
  out.push_back(make_check("example1.ordinary_reductions_form", ordinary_form,
                           {0.0, 0.0, 0.0}, 1e-14));

  const Matrix4& abc = rep[ReductionKind::A_BC].reduction.matrix();
  const Matrix4& bca = rep[ReductionKind::B_CA].reduction.matrix();
  const Matrix4& cab = rep[ReductionKind::C_AB].reduction.matrix();
  out.push_back(make_check(
      "example1.special_reductions_equal",
      {max_abs_diff(abc, bca), max_abs_diff(bca, cab), max_abs_diff(abc, cab)},
      {0.0, 0.0, 0.0}, 1e-14));
  out.push_back(make_check("example1.special_reductions_bell",
                           {max_abs_diff(abc, bell_projector()),
                            max_abs_diff(bca, bell_projector()),
                            max_abs_diff(cab, bell_projector())},
                           {0.0, 0.0, 0.0}, 1e-14));

  std::vector<double> jacobi_min, oracle_min;
  for (ReductionKind k : kSpecialReductions) {
    jacobi_min.push_back(rep[k].min_pt_eigenvalue);
    oracle_min.push_back(
        oracle::eigenvalues(partial_transpose_second(rep[k].reduction.matrix()))[0]);
  }
  out.push_back(make_check("example1.special_min_pt_eigenvalue", jacobi_min,
                           {-0.5, -0.5, -0.5}, 1e-10));
  out.push_back(make_check("example1.oracle_min_pt_eigenvalue", oracle_min,
                           {-0.5, -0.5, -0.5}, 1e-10));

  std::size_t special = 0, ordinary = 0;
  for (ReductionKind k : rep.witnesses) (is_special(k) ? special : ordinary)++;
  out.push_back(make_check(
      "example1.verdict",
      {flag(rep.verdict == Verdict::Entangled), double(special), double(ordinary)},
      {1.0, 3.0, 0.0}, 0.0));
  return out;
}

std::vector<double> default_x_grid() {
  std::vector<double> grid;
  for (int k = 0; k <= 10; ++k) grid.push_back(k / 10.0);
  grid.push_back(1.0 / 3.0);
  grid.push_back(1.0 / 3.0 - 1e-6);
  grid.push_back(1.0 / 3.0 + 1e-6);
  return grid;
}

std::vector<CheckResult> check_example2(const std::vector<double>& x_grid) {
  std::vector<CheckResult> out;
  for (double x : x_grid) {
    const std::string tag = "[x=" + fmt(x) + "]";
    const DensityMatrix8 rho = werner_embedded(x);
    const EntanglementReport rep = entanglement_criterion(rho);
    const DensityMatrix4& sigma = rep[ReductionKind::A_BC].reduction;

    out.push_back(make_check(
        "example2.reduction_is_werner" + tag,
        {max_abs_diff(sigma.matrix(), werner_state(x).matrix())}, {0.0}, 1e-14));

    const double low = 0.25 * (1.0 - 3.0 * x);
    const double high = 0.25 * (1.0 + x);
    out.push_back(make_check("example2.pt_spectrum" + tag,
                             as_vector(ppt_spectrum(sigma)),
                             sorted({low, high, high, high}), 1e-10));

    // lambda_min = (1 - 3x)/4 < -tol  <=>  x > (1 + 4 tol)/3.
    const bool expect_entangled = x > (1.0 + 4.0 * rep.tolerance) / 3.0;
    out.push_back(make_check(
        "example2.verdict" + tag,
        {flag(rep.verdict == Verdict::Entangled),
         flag(rep.is_witness(ReductionKind::A_BC))},
        {flag(expect_entangled), flag(expect_entangled)}, 0.0, std::nullopt,
        "min PT eigenvalue of a-bc " + fmt(rep[ReductionKind::A_BC].min_pt_eigenvalue)));
  }
  return out;
}

std::vector<CheckResult> check_embeddings(std::uint64_t seed) {
  std::vector<CheckResult> out;

  Rng rng(seed);
  const Matrix4 local = kron(haar_unitary(rng), haar_unitary(rng));
  const DensityMatrix4 werner = werner_state(0.9);
  const DensityMatrix4 rotated =
      DensityMatrix4::validated(local * werner.matrix() * local.adjoint());

  struct Case {
    const char* label;
    const DensityMatrix4* r;
    std::optional<std::uint64_t> seed;
  };
  for (const Case& c : {Case{"werner0.9", &werner, std::nullopt},
                        Case{"rotated", &rotated, seed}}) {
    for (int slot = 1; slot <= 6; ++slot) {
      const ReductionKind kind = kind_for_slot(slot);
      const std::string tag = std::string("[") + c.label +
                              ",slot=" + std::to_string(slot) + "]";
      const DensityMatrix8 rho = embed_bipartite(*c.r, slot);
      const EntanglementReport rep = entanglement_criterion(rho);
      out.push_back(make_check(
          "embeddings.round_trip" + tag,
          {max_abs_diff(rep[kind].reduction.matrix(), c.r->matrix())}, {0.0},
          1e-14, c.seed));
      out.push_back(make_check(
          "embeddings.verdict" + tag,
          {flag(rep.verdict == Verdict::Entangled), flag(rep.is_witness(kind))},
          {1.0, 1.0}, 0.0, c.seed,
          std::string("witness ") + std::string(kind_name(kind)) + " min PT " +
              fmt(rep[kind].min_pt_eigenvalue)));
    }
  }

  const DensityMatrix4 mixed = DensityMatrix4::validated(0.25 * Matrix4::identity());
  std::vector<double> verdicts;
  for (int slot = 1; slot <= 6; ++slot)
    verdicts.push_back(flag(entanglement_criterion(embed_bipartite(mixed, slot)).verdict ==
                            Verdict::Entangled));
  out.push_back(make_check("embeddings.maximally_mixed_inconclusive", verdicts,
                           std::vector<double>(6, 0.0), 0.0));
  return out;
}

std::vector<MoleculeParams> default_molecule_grid() {
  const double values[] = {0.0, 0.25, 1.0 / 3.0, 0.5, 1.0};
  std::vector<MoleculeParams> grid;
  for (double ab : values)
    for (double bc : values)
      for (double ac : values)
        if (std::abs(ab + bc + ac - 1.0) <= 1e-12) grid.push_back({ab, bc, ac});
  return grid;
}

std::vector<CheckResult> check_example3(const std::vector<MoleculeParams>& grid) {
  std::vector<CheckResult> out;
  struct Pair {
    ReductionKind kind;
    double MoleculeParams::*p;
  };
  const Pair pairs[] = {{ReductionKind::AB, &MoleculeParams::p_ab},
                        {ReductionKind::AC, &MoleculeParams::p_ac},
                        {ReductionKind::BC, &MoleculeParams::p_bc}};

  for (const MoleculeParams& p : grid) {
    const std::string tag = "[" + molecule_label(p) + "]";
    const EntanglementReport rep = entanglement_criterion(molecule_state(p));
    int negative_pairs = 0;

    for (const Pair& pair : pairs) {
      const double prs = p.*pair.p;
      const std::string ptag = tag + "." + std::string(kind_name(pair.kind));
      const Matrix4& sigma = rep[pair.kind].reduction.matrix();

      // Only (0,0), (1,1), (2,2), (1,2), (2,1) may be non-zero; the
      // coherence is p_rs/2.
      double outside = 0.0;
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
          const bool allowed = (r == c && r < 3) || (r == 1 && c == 2) ||
                               (r == 2 && c == 1);
          if (!allowed) outside = std::max(outside, std::abs(sigma(r, c)));
        }
      out.push_back(make_check(
          "example3.shape" + ptag,
          {outside, std::abs(sigma(1, 2) - 0.5 * prs),
           std::abs(sigma(2, 1) - 0.5 * prs),
           std::abs(sigma(0, 0).real() + sigma(1, 1).real() + sigma(2, 2).real() - 1.0)},
          {0.0, 0.0, 0.0, 0.0}, 1e-14));

      const double lambda = rep[pair.kind].min_pt_eigenvalue;
      if (lambda < -1e-10) ++negative_pairs;
      if (prs > 0.0) {
        out.push_back(make_check("example3.pair_witness" + ptag,
                                 {flag(lambda < -1e-10)}, {1.0}, 0.0,
                                 std::nullopt, "min PT eigenvalue " + fmt(lambda)));
        // The negative PT eigenvalue is simple, so the oracle resolves it
        // to full precision. Closed form uses alpha read off the reduction.
        const double alpha = sigma(0, 0).real();
        const double closed = 0.5 * (alpha - std::sqrt(alpha * alpha + prs * prs));
        const double via_oracle =
            oracle::eigenvalues(partial_transpose_second(sigma))[0];
        out.push_back(make_check("example3.min_pt_eigenvalue" + ptag,
                                 {lambda, via_oracle}, {closed, closed}, 1e-10));
      }
    }
    out.push_back(make_check(
        "example3.verdict" + tag,
        {flag(rep.verdict == Verdict::Entangled), flag(negative_pairs >= 1)},
        {1.0, 1.0}, 0.0));
  }
  return out;
}

std::vector<CheckResult> check_counterexample() {
  std::vector<CheckResult> out;
  const auto vecs = upb_vectors();
  std::vector<double> gram_err;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      Complex ip = 0.0;
      for (std::size_t k = 0; k < 8; ++k) ip += std::conj(vecs[a][k]) * vecs[b][k];
      gram_err.push_back(std::abs(ip - Complex(a == b ? 1.0 : 0.0)));
    }
  out.push_back(make_check("counterexample.gram_identity", gram_err,
                           std::vector<double>(16, 0.0), 1e-12));

  const DensityMatrix8 rho = upb_state();
  const EntanglementReport rep = entanglement_criterion(rho);
  std::vector<double> clamped;
  std::string note;
  for (const ReductionResult& r : rep.per_reduction) {
    clamped.push_back(nonnegative_part(r.min_pt_eigenvalue));
    note += std::string(kind_name(r.kind)) + "=" + fmt(r.min_pt_eigenvalue) + " ";
  }
  out.push_back(make_check("counterexample.all_reductions_ppt", clamped,
                           std::vector<double>(6, 0.0), 1e-10, std::nullopt,
                           note));
  out.push_back(make_check("counterexample.verdict_inconclusive",
                           {flag(rep.verdict == Verdict::Entangled)}, {0.0}, 0.0,
                           std::nullopt,
                           "state is PPT-entangled; this test cannot see it"));
  return out;
}

std::vector<CheckResult> run_property_suite(std::uint64_t first_seed,
                                            std::uint64_t count) {
  std::vector<CheckResult> out;
  const std::uint64_t last = first_seed + count;

  // Soundness: separable in, never Entangled out.
  std::size_t false_positives = 0;
  double worst = 0.0;
  for (std::uint64_t s = first_seed; s < last; ++s) {
    const int k = 1 + static_cast<int>(s % 8);
    const SeparableSample sample = random_separable(s, k);
    const EntanglementReport rep = entanglement_criterion(sample.state);
    if (rep.verdict == Verdict::Entangled) ++false_positives;
    for (const ReductionResult& r : rep.per_reduction)
      worst = std::min(worst, r.min_pt_eigenvalue);
  }
  out.push_back(make_check("property.soundness_separable",
                           {double(false_positives)}, {0.0}, 0.0, first_seed,
                           std::to_string(count) +
                               " mixtures, most negative PT eigenvalue " + fmt(worst)));

  // All six reductions of a random state are density matrices.
  std::size_t valid = 0;
  for (std::uint64_t s = first_seed; s < last; ++s) {
    const DensityMatrix8 rho = random_density(s);
    for (ReductionKind kind : kAllReductions)
      if (is_density_matrix(reduce_entries(rho.matrix(), kind), 1e-10)) ++valid;
  }
  out.push_back(make_check("property.reductions_are_density_matrices",
                           {double(valid)}, {double(6 * count)}, 0.0, first_seed));

  // Linearity: reduce(sum p rho) = sum p reduce(rho).
  double lin_err = 0.0;
  for (std::uint64_t s = first_seed; s < last; ++s) {
    Rng rng(s ^ 0x9e3779b97f4a7c15ULL);
    const double w[3] = {rng.exponential(), rng.exponential(), rng.exponential()};
    const double total = w[0] + w[1] + w[2];
    const Matrix8 parts[3] = {random_density(s).matrix(),
                              random_separable(s, 3).state.matrix(),
                              random_density(s + count).matrix()};
    Matrix8 mix;
    for (int a = 0; a < 3; ++a) mix += (w[a] / total) * parts[a];
    for (ReductionKind kind : kAllReductions) {
      Matrix4 expected;
      for (int a = 0; a < 3; ++a)
        expected += (w[a] / total) * reduce_entries(parts[a], kind);
      lin_err = std::max(lin_err, max_abs_diff(reduce_entries(mix, kind), expected));
    }
  }
  out.push_back(make_check("property.linearity", {lin_err}, {0.0}, 1e-13, first_seed));

  // Pure state: rho_(X,YZ) = eta^2 Phi + eta~^2 Phi~, weights sum to 1.
  double rec_err = 0.0, weight_err = 0.0;
  for (std::uint64_t s = first_seed; s < last; ++s) {
    const PureState3 psi = random_pure(s);
    const DensityMatrix8 rho = pure_to_density(psi);
    for (ReductionKind kind : kSpecialReductions) {
      const PairDecomposition d = pure_pair_decomposition(psi, kind);
      weight_err = std::max(weight_err,
                            std::abs(d.weight_plain + d.weight_flipped - 1.0));
      rec_err = std::max(rec_err, max_abs_diff(d.reconstruct(),
                                               special_reduction(rho, kind).matrix()));
    }
  }
  out.push_back(make_check("property.pair_decomposition_reconstruction",
                           {rec_err}, {0.0}, 1e-12, first_seed));
  out.push_back(make_check("property.pair_decomposition_weights", {weight_err},
                           {0.0}, 1e-12, first_seed));

  // Product state: rho_(A,BC) = rho_A (x) omega_BC with gamma_C = 2 Re(c0 c1*),
  // and cyclically.
  double fact_err = 0.0;
  for (std::uint64_t s = first_seed; s < last; ++s) {
    const ProductPureState st = random_product(s);
    const DensityMatrix8 rho = product_pure(st);
    auto projector = [](const Qubit& q) {
      return Matrix2::outer({q[0], q[1]});
    };
    auto omega = [](const Qubit& q, const Qubit& g) {
      const double gamma = 2.0 * (g[0] * std::conj(g[1])).real();
      return Matrix2::from_rows({std::norm(q[0]), gamma * q[0] * std::conj(q[1]),
                                 gamma * std::conj(q[0]) * q[1], std::norm(q[1])});
    };
    const Matrix4 expect[3] = {kron(projector(st.a()), omega(st.b(), st.c())),
                               kron(projector(st.b()), omega(st.c(), st.a())),
                               kron(projector(st.c()), omega(st.a(), st.b()))};
    for (std::size_t k = 0; k < 3; ++k)
      fact_err = std::max(fact_err,
                          max_abs_diff(special_reduction(rho, kSpecialReductions[k]).matrix(),
                                       expect[k]));
  }
  out.push_back(make_check("property.product_factorization", {fact_err}, {0.0},
                           1e-12, first_seed));
  return out;
}

std::vector<CheckResult> check_numerics(std::uint64_t first_seed,
                                        std::uint64_t count) {
  double eig_err = 0.0, trace_err = 0.0, det_err = 0.0, involution_err = 0.0;
  for (std::uint64_t s = first_seed; s < first_seed + count; ++s) {
    Rng rng(s);
    Matrix4 g;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) g(r, c) = rng.complex_gaussian();
    const Matrix4 h = g.hermitian_part();

    const auto jac = hermitian_eigenvalues(h);
    const auto ref = oracle::eigenvalues(h);
    double sum = 0.0, prod = 1.0;
    for (std::size_t k = 0; k < 4; ++k) {
      eig_err = std::max(eig_err, std::abs(jac[k] - ref[k]));
      sum += jac[k];
      prod *= jac[k];
    }
    trace_err = std::max(trace_err, std::abs(sum - h.trace().real()));
    det_err = std::max(det_err, std::abs(prod - oracle::determinant(h)));
    involution_err = std::max(
        involution_err, max_abs_diff(partial_transpose_second(partial_transpose_second(g)), g));
  }
  return {
      make_check("numerics.jacobi_vs_oracle", {eig_err}, {0.0}, 1e-8, first_seed,
                 std::to_string(count) + " random Hermitian 4x4"),
      make_check("numerics.eigenvalue_sum_is_trace", {trace_err}, {0.0}, 1e-9,
                 first_seed),
      make_check("numerics.eigenvalue_product_is_determinant", {det_err}, {0.0},
                 1e-8, first_seed),
      make_check("numerics.partial_transpose_involution", {involution_err},
                 {0.0}, 0.0, first_seed),
  };
}

std::vector<CheckResult> run_all(std::uint64_t seeds) {
  std::vector<CheckResult> all;
  auto append = [&all](std::vector<CheckResult> part) {
    for (CheckResult& r : part) all.push_back(std::move(r));
  };
  append(check_example1());
  append(check_example2(default_x_grid()));
  append(check_embeddings(1));
  append(check_example3(default_molecule_grid()));
  append(check_counterexample());
  append(run_property_suite(1, seeds));
  append(check_numerics(1, std::min(seeds, kNumericsSamples)));
  return all;
}

std::string to_json(const std::vector<CheckResult>& results) {
  nlohmann::json checks = nlohmann::json::array();
  std::size_t passed = 0;
  for (const CheckResult& r : results) {
    nlohmann::json j;
    j["name"] = r.name;
    j["passed"] = r.passed;
    j["observed"] = r.observed;
    j["expected"] = r.expected;
    j["tolerance"] = r.tolerance;
    j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
    if (!r.note.empty()) j["note"] = r.note;
    checks.push_back(std::move(j));
    if (r.passed) ++passed;
  }
  nlohmann::json doc;
  doc["checks"] = std::move(checks);
  doc["passed"] = passed;
  doc["failed"] = results.size() - passed;
  doc["total"] = results.size();
  return doc.dump(2);
}

}  // namespace tripent::verify
