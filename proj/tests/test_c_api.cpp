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

// Exercises the shared library through tripent.h only.

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "tripent/tripent.h"

namespace {

struct Handle {
  tripent_matrix* m = nullptr;
  ~Handle() { tripent_matrix_free(m); }
};

std::vector<double> identity_over(int dim) {
  std::vector<double> v(2 * dim * dim, 0.0);
  for (int i = 0; i < dim; ++i) v[2 * (i * dim + i)] = 1.0 / dim;
  return v;
}

}  // namespace

TEST_CASE("version and names") {
  CHECK(std::strlen(tripent_version()) > 0);
  CHECK(std::string(tripent_kind_name(TRIPENT_KIND_C_AB)) == "c-ab");
  tripent_kind k;
  CHECK(tripent_kind_parse("b-ca", &k) == TRIPENT_OK);
  CHECK(k == TRIPENT_KIND_B_CA);
  CHECK(tripent_kind_parse("xyz", &k) == TRIPENT_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(tripent_status_string(TRIPENT_ERR_PARSE)) > 0);
}

TEST_CASE("matrix create, read back and validate") {
  Handle h;
  const std::vector<double> id = identity_over(4);
  REQUIRE(tripent_matrix_create(4, id.data(), &h.m) == TRIPENT_OK);
  CHECK(tripent_matrix_dim(h.m) == 4);
  double re = 0, im = 1;
  CHECK(tripent_matrix_entry(h.m, 2, 2, &re, &im) == TRIPENT_OK);
  CHECK(re == 0.25);
  CHECK(im == 0.0);
  CHECK(tripent_matrix_entry(h.m, 4, 0, &re, &im) == TRIPENT_ERR_INVALID_ARGUMENT);

  std::vector<double> out(32);
  CHECK(tripent_matrix_copy_out(h.m, out.data(), out.size()) == TRIPENT_OK);
  CHECK(out == id);
  CHECK(tripent_matrix_copy_out(h.m, out.data(), 8) == TRIPENT_ERR_INVALID_ARGUMENT);

  int ok = 0;
  char diag[128];
  CHECK(tripent_matrix_validate(h.m, 1e-10, &ok, diag, sizeof diag) == TRIPENT_OK);
  CHECK(ok == 1);

  double ev[4];
  CHECK(tripent_matrix_eigenvalues(h.m, ev, 4) == TRIPENT_OK);
  for (double v : ev) CHECK(v == doctest::Approx(0.25));
}

TEST_CASE("bad arguments are reported, not crashed on") {
  tripent_matrix* m = nullptr;
  const std::vector<double> id = identity_over(4);
  CHECK(tripent_matrix_create(5, id.data(), &m) == TRIPENT_ERR_INVALID_ARGUMENT);
  CHECK(tripent_matrix_create(4, nullptr, &m) == TRIPENT_ERR_INVALID_ARGUMENT);
  CHECK(m == nullptr);
  CHECK(tripent_state_werner(1.5, &m) == TRIPENT_ERR_PARAM_OUT_OF_RANGE);
  CHECK(std::strlen(tripent_last_error()) > 0);
  CHECK(tripent_state_separable(1, 0, &m) == TRIPENT_ERR_PARAM_OUT_OF_RANGE);
  CHECK(tripent_check(nullptr, 1e-10, nullptr) == TRIPENT_ERR_INVALID_ARGUMENT);

  Handle w;
  REQUIRE(tripent_state_werner(0.5, &w.m) == TRIPENT_OK);
  Handle r;
  REQUIRE(tripent_reduce(w.m, TRIPENT_KIND_A_BC, &r.m) == TRIPENT_OK);
  CHECK(tripent_state_embed(r.m, 7, &m) == TRIPENT_ERR_INVALID_SLOT);
  // An 8x8 matrix is not a valid embedding input.
  CHECK(tripent_state_embed(w.m, 1, &m) == TRIPENT_ERR_INVALID_INPUT);
  tripent_report* rep0 = nullptr;
  CHECK(tripent_check(w.m, -1.0, &rep0) == TRIPENT_ERR_INVALID_ARGUMENT);
  CHECK(tripent_check(w.m, NAN, &rep0) == TRIPENT_ERR_INVALID_ARGUMENT);
  CHECK(rep0 == nullptr);

  // Not a state: trace 2.
  Handle bad;
  std::vector<double> two = identity_over(8);
  for (double& v : two) v *= 2.0;
  REQUIRE(tripent_matrix_create(8, two.data(), &bad.m) == TRIPENT_OK);
  tripent_report* rep = nullptr;
  CHECK(tripent_check(bad.m, 1e-10, &rep) == TRIPENT_ERR_INVALID_INPUT);
  CHECK(rep == nullptr);
  int ok = 1;
  char diag[128];
  CHECK(tripent_matrix_validate(bad.m, 1e-10, &ok, diag, sizeof diag) == TRIPENT_OK);
  CHECK(ok == 0);
  CHECK(std::string(diag).find("trace") != std::string::npos);
}

TEST_CASE("GHZ through the C interface") {
  Handle g;
  REQUIRE(tripent_state_ghz(&g.m) == TRIPENT_OK);
  tripent_report* rep = nullptr;
  REQUIRE(tripent_check(g.m, TRIPENT_DEFAULT_CRITERION_TOLERANCE, &rep) == TRIPENT_OK);
  CHECK(tripent_report_verdict(rep) == TRIPENT_VERDICT_ENTANGLED);
  CHECK(tripent_report_tolerance(rep) == TRIPENT_DEFAULT_CRITERION_TOLERANCE);
  for (int k = 0; k < TRIPENT_KIND_COUNT; ++k) {
    double lambda = 0;
    CHECK(tripent_report_min_pt_eigenvalue(rep, tripent_kind(k), &lambda) == TRIPENT_OK);
    const bool special = k >= TRIPENT_KIND_A_BC;
    CHECK(tripent_report_is_witness(rep, tripent_kind(k)) == (special ? 1 : 0));
    if (special) CHECK(lambda == doctest::Approx(-0.5));
  }
  char* json = nullptr;
  REQUIRE(tripent_report_to_json(rep, &json) == TRIPENT_OK);
  const auto doc = nlohmann::json::parse(json);
  tripent_string_free(json);
  CHECK(doc["verdict"] == "entangled");
  CHECK(doc["witnesses"] == nlohmann::json({"a-bc", "b-ca", "c-ab"}));
  CHECK(doc["reductions"].size() == 6);
  tripent_report_free(rep);

  Handle bell;
  REQUIRE(tripent_reduce(g.m, TRIPENT_KIND_A_BC, &bell.m) == TRIPENT_OK);
  double lambda = 0;
  CHECK(tripent_ppt_min_eigenvalue(bell.m, &lambda) == TRIPENT_OK);
  CHECK(lambda == doctest::Approx(-0.5));
}

TEST_CASE("state constructors give verdicts matching their family") {
  Handle upb;
  REQUIRE(tripent_state_upb(&upb.m) == TRIPENT_OK);
  Handle mol;
  REQUIRE(tripent_state_molecule(0.25, 0.25, 0.5, &mol.m) == TRIPENT_OK);
  Handle sep;
  REQUIRE(tripent_state_separable(42, 4, &sep.m) == TRIPENT_OK);
  Handle rnd;
  REQUIRE(tripent_state_random(42, &rnd.m) == TRIPENT_OK);

  const std::pair<tripent_matrix*, tripent_verdict> cases[] = {
      {upb.m, TRIPENT_VERDICT_INCONCLUSIVE},
      {mol.m, TRIPENT_VERDICT_ENTANGLED},
      {sep.m, TRIPENT_VERDICT_INCONCLUSIVE}};
  for (const auto& [m, verdict] : cases) {
    tripent_report* rep = nullptr;
    REQUIRE(tripent_check(m, 1e-10, &rep) == TRIPENT_OK);
    CHECK(tripent_report_verdict(rep) == verdict);
    tripent_report_free(rep);
  }
  CHECK(tripent_matrix_dim(rnd.m) == 8);
}

TEST_CASE("embedding round trip through the C interface") {
  Handle w;
  REQUIRE(tripent_state_werner(0.9, &w.m) == TRIPENT_OK);
  Handle r;
  REQUIRE(tripent_reduce(w.m, TRIPENT_KIND_A_BC, &r.m) == TRIPENT_OK);
  const tripent_kind kinds[] = {TRIPENT_KIND_A_BC, TRIPENT_KIND_B_CA, TRIPENT_KIND_C_AB,
                                TRIPENT_KIND_AB,   TRIPENT_KIND_AC,   TRIPENT_KIND_BC};
  std::vector<double> want(32), got(32);
  tripent_matrix_copy_out(r.m, want.data(), want.size());
  for (int slot = 1; slot <= 6; ++slot) {
    Handle e, back;
    REQUIRE(tripent_state_embed(r.m, slot, &e.m) == TRIPENT_OK);
    REQUIRE(tripent_reduce(e.m, kinds[slot - 1], &back.m) == TRIPENT_OK);
    tripent_matrix_copy_out(back.m, got.data(), got.size());
    for (std::size_t i = 0; i < 32; ++i) CHECK(std::abs(got[i] - want[i]) <= 1e-14);
  }
}

TEST_CASE("JSON round trip through the C interface") {
  Handle g;
  REQUIRE(tripent_state_random(9, &g.m) == TRIPENT_OK);
  char* text = nullptr;
  REQUIRE(tripent_matrix_to_json(g.m, "r9", &text) == TRIPENT_OK);
  Handle back;
  CHECK(tripent_matrix_from_json(text, &back.m) == TRIPENT_OK);
  tripent_string_free(text);
  std::vector<double> a(128), b(128);
  tripent_matrix_copy_out(g.m, a.data(), a.size());
  tripent_matrix_copy_out(back.m, b.data(), b.size());
  CHECK(a == b);

  tripent_matrix* m = nullptr;
  CHECK(tripent_matrix_from_json("{", &m) == TRIPENT_ERR_PARSE);
}

TEST_CASE("verification suite through the C interface") {
  tripent_suite* s = nullptr;
  REQUIRE(tripent_verify(20, &s) == TRIPENT_OK);
  CHECK(tripent_suite_size(s) > 100);
  CHECK(tripent_suite_failed(s) == 0);
  const char* name = nullptr;
  const char* summary = nullptr;
  int passed = 0;
  CHECK(tripent_suite_check(s, 0, &name, &passed, &summary) == TRIPENT_OK);
  CHECK(passed == 1);
  CHECK(std::strlen(name) > 0);
  CHECK(tripent_suite_check(s, tripent_suite_size(s), &name, &passed, &summary) ==
        TRIPENT_ERR_INVALID_ARGUMENT);
  tripent_suite_free(s);
}
