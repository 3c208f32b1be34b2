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

#include "tripent/tripent.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <new>
#include <string>
#include <variant>

#include "json.hpp"

#include "tripent/criterion.hpp"
#include "tripent/error.hpp"
#include "tripent/matrix_file.hpp"
#include "tripent/states.hpp"
#include "tripent/verify.hpp"

struct tripent_matrix {
  std::variant<tripent::Matrix4, tripent::Matrix8> m;
};

struct tripent_report {
  tripent::EntanglementReport report;
};

struct tripent_suite {
  std::vector<tripent::verify::CheckResult> results;
  std::vector<std::string> summaries;
};

namespace {

using namespace tripent;

thread_local std::string g_last_error;

tripent_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonHermitian: return TRIPENT_ERR_NON_HERMITIAN;
    case ErrorCode::NotNormalized: return TRIPENT_ERR_NOT_NORMALIZED;
    case ErrorCode::ParamOutOfRange: return TRIPENT_ERR_PARAM_OUT_OF_RANGE;
    case ErrorCode::InvalidSlot: return TRIPENT_ERR_INVALID_SLOT;
    case ErrorCode::InvalidInput: return TRIPENT_ERR_INVALID_INPUT;
    case ErrorCode::LemmaViolation: return TRIPENT_ERR_LEMMA_VIOLATION;
    case ErrorCode::NoConvergence: return TRIPENT_ERR_NO_CONVERGENCE;
    case ErrorCode::Parse: return TRIPENT_ERR_PARSE;
  }
  return TRIPENT_ERR_INTERNAL;
}

tripent_status fail(tripent_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

template <class F>
tripent_status guarded(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TRIPENT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TRIPENT_ERR_INTERNAL, e.what());
  }
}

tripent_status null_argument(const char* name) {
  return fail(TRIPENT_ERR_INVALID_ARGUMENT, std::string(name) + " is null");
}

char* dup_string(const std::string& s) {
  char* p = new char[s.size() + 1];
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <std::size_t N>
tripent_matrix* wrap(const Matrix<N>& m) {
  return new tripent_matrix{m};
}

template <std::size_t N>
tripent_matrix* wrap(const DensityMatrix<N>& m) {
  return wrap(m.matrix());
}

// Validate an externally supplied state of dimension N.
template <std::size_t N>
DensityMatrix<N> as_state(const tripent_matrix* m, const char* what) {
  const auto* mat = std::get_if<Matrix<N>>(&m->m);
  if (!mat)
    throw Error(ErrorCode::InvalidInput, std::string(what) + " must be " +
                                             std::to_string(N) + "x" +
                                             std::to_string(N));
  return DensityMatrix<N>::validated(
      *mat, DensityTolerances::uniform(TRIPENT_INPUT_TOLERANCE));
}

int dim_of(const tripent_matrix* m) {
  return std::holds_alternative<Matrix4>(m->m) ? 4 : 8;
}

Complex entry_of(const tripent_matrix* m, std::size_t r, std::size_t c) {
  return std::visit([&](const auto& mat) { return mat(r, c); }, m->m);
}

bool valid_kind(tripent_kind k) {
  return static_cast<int>(k) >= 0 && static_cast<int>(k) < TRIPENT_KIND_COUNT;
}

ReductionKind to_kind(tripent_kind k) { return kAllReductions[static_cast<std::size_t>(k)]; }

std::string summarize(const verify::CheckResult& r) {
  auto list = [](const std::vector<double>& v) {
    std::string s = "[";
    char buf[32];
    for (std::size_t k = 0; k < v.size(); ++k) {
      std::snprintf(buf, sizeof buf, "%.6g", v[k]);
      s += (k ? ", " : "") + std::string(buf);
    }
    return s + "]";
  };
  char tol[32];
  std::snprintf(tol, sizeof tol, "%g", r.tolerance);
  std::string s = "observed " + list(r.observed) + " expected " +
                  list(r.expected) + " tol " + tol;
  if (r.seed) s += " seed " + std::to_string(*r.seed);
  if (!r.note.empty()) s += " (" + r.note + ")";
  return s;
}

}  // namespace

extern "C" {

const char* tripent_version(void) { return "1.0.0"; }

const char* tripent_last_error(void) { return g_last_error.c_str(); }

const char* tripent_status_string(tripent_status status) {
  switch (status) {
    case TRIPENT_OK: return "ok";
    case TRIPENT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case TRIPENT_ERR_NON_HERMITIAN: return "matrix is not Hermitian";
    case TRIPENT_ERR_NOT_NORMALIZED: return "state is not normalised";
    case TRIPENT_ERR_PARAM_OUT_OF_RANGE: return "parameter out of range";
    case TRIPENT_ERR_INVALID_SLOT: return "invalid embedding slot";
    case TRIPENT_ERR_INVALID_INPUT: return "invalid input matrix";
    case TRIPENT_ERR_LEMMA_VIOLATION: return "reduction is not a density matrix";
    case TRIPENT_ERR_NO_CONVERGENCE: return "eigensolver did not converge";
    case TRIPENT_ERR_PARSE: return "parse error";
    case TRIPENT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void tripent_string_free(char* s) { delete[] s; }

const char* tripent_kind_name(tripent_kind kind) {
  if (!valid_kind(kind)) return nullptr;
  // kind_name views static literals, so data() is NUL-terminated.
  return kind_name(to_kind(kind)).data();
}

tripent_status tripent_kind_parse(const char* name, tripent_kind* out) {
  if (!name) return null_argument("name");
  if (!out) return null_argument("out");
  const auto k = parse_kind(name);
  if (!k)
    return fail(TRIPENT_ERR_INVALID_ARGUMENT,
                std::string("unknown reduction kind '") + name +
                    "' (expected ab, ac, bc, a-bc, b-ca or c-ab)");
  *out = static_cast<tripent_kind>(static_cast<int>(*k));
  return TRIPENT_OK;
}

tripent_status tripent_matrix_create(int dim, const double* re_im,
                                     tripent_matrix** out) {
  if (!re_im) return null_argument("re_im");
  if (!out) return null_argument("out");
  if (dim != 4 && dim != 8)
    return fail(TRIPENT_ERR_INVALID_ARGUMENT, "dim must be 4 or 8");
  return guarded([&] {
    auto fill = [&](auto mat) {
      constexpr std::size_t n = decltype(mat)::kDim;
      for (std::size_t k = 0; k < n * n; ++k) {
        const double re = re_im[2 * k], im = re_im[2 * k + 1];
        if (!std::isfinite(re) || !std::isfinite(im))
          throw Error(ErrorCode::InvalidInput, "non-finite matrix entry");
        mat(k / n, k % n) = Complex(re, im);
      }
      return wrap(mat);
    };
    *out = dim == 4 ? fill(Matrix4{}) : fill(Matrix8{});
    return TRIPENT_OK;
  });
}

void tripent_matrix_free(tripent_matrix* m) { delete m; }

int tripent_matrix_dim(const tripent_matrix* m) { return m ? dim_of(m) : 0; }

tripent_status tripent_matrix_entry(const tripent_matrix* m, int row, int col,
                                    double* re, double* im) {
  if (!m) return null_argument("m");
  if (!re || !im) return null_argument("re/im");
  const int n = dim_of(m);
  if (row < 0 || col < 0 || row >= n || col >= n)
    return fail(TRIPENT_ERR_INVALID_ARGUMENT, "entry index out of range");
  const Complex z = entry_of(m, static_cast<std::size_t>(row), static_cast<std::size_t>(col));
  *re = z.real();
  *im = z.imag();
  return TRIPENT_OK;
}

tripent_status tripent_matrix_copy_out(const tripent_matrix* m, double* re_im,
                                       size_t capacity) {
  if (!m) return null_argument("m");
  if (!re_im) return null_argument("re_im");
  const std::size_t n = static_cast<std::size_t>(dim_of(m));
  if (capacity < 2 * n * n)
    return fail(TRIPENT_ERR_INVALID_ARGUMENT, "output buffer too small");
  for (std::size_t k = 0; k < n * n; ++k) {
    const Complex z = entry_of(m, k / n, k % n);
    re_im[2 * k] = z.real();
    re_im[2 * k + 1] = z.imag();
  }
  return TRIPENT_OK;
}

tripent_status tripent_matrix_validate(const tripent_matrix* m, double tol,
                                       int* is_density, char* diagnostics,
                                       size_t diagnostics_len) {
  if (!m) return null_argument("m");
  if (!is_density) return null_argument("is_density");
  if (!(tol >= 0.0) || !std::isfinite(tol))
    return fail(TRIPENT_ERR_INVALID_ARGUMENT, "tol must be finite and >= 0");
  return guarded([&] {
    DensityDiagnostics d;
    const bool ok = std::visit(
        [&](const auto& mat) { return is_density_matrix(mat, tol, &d); }, m->m);
    *is_density = ok ? 1 : 0;
    if (diagnostics && diagnostics_len > 0)
      std::snprintf(diagnostics, diagnostics_len, "%s", d.describe().c_str());
    return TRIPENT_OK;
  });
}

tripent_status tripent_matrix_eigenvalues(const tripent_matrix* m, double* out,
                                          size_t capacity) {
  if (!m) return null_argument("m");
  if (!out) return null_argument("out");
  if (capacity < static_cast<size_t>(dim_of(m)))
    return fail(TRIPENT_ERR_INVALID_ARGUMENT, "output buffer too small");
  return guarded([&] {
    std::visit(
        [&](const auto& mat) {
          const auto ev = hermitian_eigenvalues(mat);
          std::copy(ev.begin(), ev.end(), out);
        },
        m->m);
    return TRIPENT_OK;
  });
}

tripent_status tripent_matrix_from_json(const char* text, tripent_matrix** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  return guarded([&] {
    const MatrixFile f = parse_matrix_file(text);
    *out = f.dim == 4 ? wrap(to_matrix<4>(f)) : wrap(to_matrix<8>(f));
    return TRIPENT_OK;
  });
}

tripent_status tripent_matrix_to_json(const tripent_matrix* m, const char* label,
                                      char** out) {
  if (!m) return null_argument("m");
  if (!out) return null_argument("out");
  return guarded([&] {
    std::optional<std::string> lab;
    if (label) lab = label;
    const MatrixFile f =
        std::visit([&](const auto& mat) { return to_matrix_file(mat, lab); }, m->m);
    *out = dup_string(serialize(f));
    return TRIPENT_OK;
  });
}

tripent_status tripent_state_ghz(tripent_matrix** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = wrap(ghz());
    return TRIPENT_OK;
  });
}

tripent_status tripent_state_werner(double x, tripent_matrix** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = wrap(werner_embedded(x));
    return TRIPENT_OK;
  });
}

tripent_status tripent_state_embed(const tripent_matrix* r, int slot,
                                   tripent_matrix** out) {
  if (!r) return null_argument("r");
  if (!out) return null_argument("out");
  return guarded([&] {
    if (slot < 1 || slot > 6)
      throw Error(ErrorCode::InvalidSlot,
                  "embedding slot " + std::to_string(slot) + " is not in 1..6");
    *out = wrap(embed_bipartite(as_state<4>(r, "embedded matrix"), slot));
    return TRIPENT_OK;
  });
}

tripent_status tripent_state_molecule(double p_ab, double p_bc, double p_ac,
                                      tripent_matrix** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = wrap(molecule_state({p_ab, p_bc, p_ac}));
    return TRIPENT_OK;
  });
}

tripent_status tripent_state_upb(tripent_matrix** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = wrap(upb_state());
    return TRIPENT_OK;
  });
}

tripent_status tripent_state_random(uint64_t seed, tripent_matrix** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = wrap(random_density(seed));
    return TRIPENT_OK;
  });
}

tripent_status tripent_state_separable(uint64_t seed, int k, tripent_matrix** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = wrap(random_separable(seed, k).state);
    return TRIPENT_OK;
  });
}

tripent_status tripent_reduce(const tripent_matrix* rho, tripent_kind kind,
                              tripent_matrix** out) {
  if (!rho) return null_argument("rho");
  if (!out) return null_argument("out");
  if (!valid_kind(kind)) return fail(TRIPENT_ERR_INVALID_ARGUMENT, "unknown kind");
  return guarded([&] {
    *out = wrap(reduce(as_state<8>(rho, "state"), to_kind(kind)));
    return TRIPENT_OK;
  });
}

tripent_status tripent_ppt_min_eigenvalue(const tripent_matrix* sigma, double* out) {
  if (!sigma) return null_argument("sigma");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = ppt_min_eigenvalue(as_state<4>(sigma, "reduction"));
    return TRIPENT_OK;
  });
}

tripent_status tripent_check(const tripent_matrix* rho, double tol,
                             tripent_report** out) {
  if (!rho) return null_argument("rho");
  if (!out) return null_argument("out");
  if (!(tol >= 0.0) || !std::isfinite(tol))
    return fail(TRIPENT_ERR_INVALID_ARGUMENT, "tol must be finite and >= 0");
  return guarded([&] {
    *out = new tripent_report{entanglement_criterion(as_state<8>(rho, "state"), tol)};
    return TRIPENT_OK;
  });
}

void tripent_report_free(tripent_report* r) { delete r; }

tripent_verdict tripent_report_verdict(const tripent_report* r) {
  return r && r->report.verdict == Verdict::Entangled ? TRIPENT_VERDICT_ENTANGLED
                                                      : TRIPENT_VERDICT_INCONCLUSIVE;
}

double tripent_report_tolerance(const tripent_report* r) {
  return r ? r->report.tolerance : 0.0;
}

tripent_status tripent_report_min_pt_eigenvalue(const tripent_report* r,
                                                tripent_kind kind, double* out) {
  if (!r) return null_argument("r");
  if (!out) return null_argument("out");
  if (!valid_kind(kind)) return fail(TRIPENT_ERR_INVALID_ARGUMENT, "unknown kind");
  *out = r->report[to_kind(kind)].min_pt_eigenvalue;
  return TRIPENT_OK;
}

int tripent_report_is_witness(const tripent_report* r, tripent_kind kind) {
  if (!r || !valid_kind(kind)) return 0;
  return r->report.is_witness(to_kind(kind)) ? 1 : 0;
}

tripent_status tripent_report_to_json(const tripent_report* r, char** out) {
  if (!r) return null_argument("r");
  if (!out) return null_argument("out");
  return guarded([&] {
    using nlohmann::json;
    json reductions = json::array();
    for (const ReductionResult& rr : r->report.per_reduction)
      reductions.push_back({{"kind", std::string(kind_name(rr.kind))},
                            {"min_pt_eigenvalue", rr.min_pt_eigenvalue},
                            {"witness", r->report.is_witness(rr.kind)}});
    json witnesses = json::array();
    for (ReductionKind k : r->report.witnesses)
      witnesses.push_back(std::string(kind_name(k)));
    json doc;
    doc["verdict"] = r->report.verdict == Verdict::Entangled ? "entangled"
                                                              : "inconclusive";
    doc["tolerance"] = r->report.tolerance;
    doc["reductions"] = std::move(reductions);
    doc["witnesses"] = std::move(witnesses);
    *out = dup_string(doc.dump(2) + "\n");
    return TRIPENT_OK;
  });
}

tripent_status tripent_verify(uint64_t seeds, tripent_suite** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    auto* s = new tripent_suite{verify::run_all(seeds), {}};
    s->summaries.reserve(s->results.size());
    for (const auto& r : s->results) s->summaries.push_back(summarize(r));
    *out = s;
    return TRIPENT_OK;
  });
}

void tripent_suite_free(tripent_suite* s) { delete s; }

size_t tripent_suite_size(const tripent_suite* s) { return s ? s->results.size() : 0; }

size_t tripent_suite_failed(const tripent_suite* s) {
  if (!s) return 0;
  size_t n = 0;
  for (const auto& r : s->results) n += r.passed ? 0 : 1;
  return n;
}

tripent_status tripent_suite_check(const tripent_suite* s, size_t index,
                                   const char** name, int* passed,
                                   const char** summary) {
  if (!s) return null_argument("s");
  if (index >= s->results.size())
    return fail(TRIPENT_ERR_INVALID_ARGUMENT, "check index out of range");
  if (name) *name = s->results[index].name.c_str();
  if (passed) *passed = s->results[index].passed ? 1 : 0;
  if (summary) *summary = s->summaries[index].c_str();
  return TRIPENT_OK;
}

tripent_status tripent_suite_to_json(const tripent_suite* s, char** out) {
  if (!s) return null_argument("s");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = dup_string(verify::to_json(s->results) + "\n");
    return TRIPENT_OK;
  });
}

}  // extern "C"
