/*
 * Copyright 2026 The tripent Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the tripent library: three-qubit entanglement detection by
 * PPT tests on six two-qubit reductions.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a tripent_status;
 * on failure a thread-local message is available from tripent_last_error().
 * Strings returned through char** out-parameters are released with
 * tripent_string_free().
 *
 * Matrices crossing this interface as states are validated with a tolerance
 * of TRIPENT_INPUT_TOLERANCE on Hermiticity, trace and positivity; a matrix
 * of the wrong dimension, or one failing validation, gives
 * TRIPENT_ERR_INVALID_INPUT.
 */
#ifndef TRIPENT_H
#define TRIPENT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TRIPENT_BUILDING_LIBRARY)
#    define TRIPENT_API __declspec(dllexport)
#  else
#    define TRIPENT_API __declspec(dllimport)
#  endif
#else
#  define TRIPENT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define TRIPENT_INPUT_TOLERANCE 1e-8
#define TRIPENT_DEFAULT_CRITERION_TOLERANCE 1e-10

typedef enum tripent_status {
  TRIPENT_OK = 0,
  TRIPENT_ERR_INVALID_ARGUMENT = 1, /* null pointer, bad dimension, bad index */
  TRIPENT_ERR_NON_HERMITIAN = 2,
  TRIPENT_ERR_NOT_NORMALIZED = 3,
  TRIPENT_ERR_PARAM_OUT_OF_RANGE = 4,
  TRIPENT_ERR_INVALID_SLOT = 5,
  TRIPENT_ERR_INVALID_INPUT = 6, /* matrix is not a density matrix */
  TRIPENT_ERR_LEMMA_VIOLATION = 7,
  TRIPENT_ERR_NO_CONVERGENCE = 8,
  TRIPENT_ERR_PARSE = 9,
  TRIPENT_ERR_INTERNAL = 10
} tripent_status;

typedef enum tripent_kind {
  TRIPENT_KIND_AB = 0,
  TRIPENT_KIND_AC = 1,
  TRIPENT_KIND_BC = 2,
  TRIPENT_KIND_A_BC = 3,
  TRIPENT_KIND_B_CA = 4,
  TRIPENT_KIND_C_AB = 5
} tripent_kind;

#define TRIPENT_KIND_COUNT 6

typedef enum tripent_verdict {
  TRIPENT_VERDICT_ENTANGLED = 0,
  TRIPENT_VERDICT_INCONCLUSIVE = 1
} tripent_verdict;

typedef struct tripent_matrix tripent_matrix; /* 4x4 or 8x8 complex */
typedef struct tripent_report tripent_report;
typedef struct tripent_suite tripent_suite;

/* ---- diagnostics ------------------------------------------------------ */

TRIPENT_API const char* tripent_version(void);
TRIPENT_API const char* tripent_last_error(void);
TRIPENT_API const char* tripent_status_string(tripent_status status);
TRIPENT_API void tripent_string_free(char* s);

/* Names: "ab", "ac", "bc", "a-bc", "b-ca", "c-ab". */
TRIPENT_API const char* tripent_kind_name(tripent_kind kind);
TRIPENT_API tripent_status tripent_kind_parse(const char* name, tripent_kind* out);

/* ---- matrices --------------------------------------------------------- */

/* `re_im` holds dim*dim interleaved (re, im) pairs, row-major. No
 * validation beyond dim in {4, 8} and finite values. */
TRIPENT_API tripent_status tripent_matrix_create(int dim, const double* re_im,
                                                 tripent_matrix** out);
TRIPENT_API void tripent_matrix_free(tripent_matrix* m);
TRIPENT_API int tripent_matrix_dim(const tripent_matrix* m);
TRIPENT_API tripent_status tripent_matrix_entry(const tripent_matrix* m, int row,
                                                int col, double* re, double* im);
/* Copies 2*dim*dim doubles into `re_im`, which must hold `capacity`. */
TRIPENT_API tripent_status tripent_matrix_copy_out(const tripent_matrix* m,
                                                   double* re_im, size_t capacity);

/* Sets *is_density to 1 or 0. If `diagnostics` is non-null, a description of
 * the failed checks (or "valid density matrix") is written into it,
 * truncated to diagnostics_len. */
TRIPENT_API tripent_status tripent_matrix_validate(const tripent_matrix* m,
                                                   double tol, int* is_density,
                                                   char* diagnostics,
                                                   size_t diagnostics_len);

/* Ascending eigenvalues of a Hermitian matrix (dim doubles). */
TRIPENT_API tripent_status tripent_matrix_eigenvalues(const tripent_matrix* m,
                                                      double* out, size_t capacity);

/* Matrix file (JSON) text. `label` may be null. */
TRIPENT_API tripent_status tripent_matrix_from_json(const char* text,
                                                    tripent_matrix** out);
TRIPENT_API tripent_status tripent_matrix_to_json(const tripent_matrix* m,
                                                  const char* label, char** out);

/* ---- state constructors (all return 8x8) ------------------------------ */

TRIPENT_API tripent_status tripent_state_ghz(tripent_matrix** out);
TRIPENT_API tripent_status tripent_state_werner(double x, tripent_matrix** out);
/* `r` is a 4x4 state; slot in 1..6 (a-bc, b-ca, c-ab, ab, ac, bc). */
TRIPENT_API tripent_status tripent_state_embed(const tripent_matrix* r, int slot,
                                               tripent_matrix** out);
TRIPENT_API tripent_status tripent_state_molecule(double p_ab, double p_bc,
                                                  double p_ac,
                                                  tripent_matrix** out);
TRIPENT_API tripent_status tripent_state_upb(tripent_matrix** out);
TRIPENT_API tripent_status tripent_state_random(uint64_t seed,
                                                tripent_matrix** out);
TRIPENT_API tripent_status tripent_state_separable(uint64_t seed, int k,
                                                   tripent_matrix** out);

/* ---- reductions and the criterion ------------------------------------- */

/* `rho` must be an 8x8 state; returns the 4x4 reduction. */
TRIPENT_API tripent_status tripent_reduce(const tripent_matrix* rho,
                                          tripent_kind kind,
                                          tripent_matrix** out);

/* Minimum eigenvalue of the partial transpose of a 4x4 state. */
TRIPENT_API tripent_status tripent_ppt_min_eigenvalue(const tripent_matrix* sigma,
                                                      double* out);

TRIPENT_API tripent_status tripent_check(const tripent_matrix* rho, double tol,
                                         tripent_report** out);
TRIPENT_API void tripent_report_free(tripent_report* r);
TRIPENT_API tripent_verdict tripent_report_verdict(const tripent_report* r);
TRIPENT_API double tripent_report_tolerance(const tripent_report* r);
TRIPENT_API tripent_status tripent_report_min_pt_eigenvalue(const tripent_report* r,
                                                            tripent_kind kind,
                                                            double* out);
TRIPENT_API int tripent_report_is_witness(const tripent_report* r,
                                          tripent_kind kind);
/* {"reductions": [{"kind", "min_pt_eigenvalue", "witness"}...],
 *  "tolerance", "verdict": "entangled"|"inconclusive", "witnesses": [...]} */
TRIPENT_API tripent_status tripent_report_to_json(const tripent_report* r,
                                                  char** out);

/* ---- verification suite ----------------------------------------------- */

/* `seeds` sizes the property checks (1000 by default in the CLI). */
TRIPENT_API tripent_status tripent_verify(uint64_t seeds, tripent_suite** out);
TRIPENT_API void tripent_suite_free(tripent_suite* s);
TRIPENT_API size_t tripent_suite_size(const tripent_suite* s);
TRIPENT_API size_t tripent_suite_failed(const tripent_suite* s);
/* Borrowed pointers, valid until tripent_suite_free. */
TRIPENT_API tripent_status tripent_suite_check(const tripent_suite* s, size_t index,
                                               const char** name, int* passed,
                                               const char** summary);
TRIPENT_API tripent_status tripent_suite_to_json(const tripent_suite* s, char** out);

#ifdef __cplusplus
}
#endif

#endif /* TRIPENT_H */
