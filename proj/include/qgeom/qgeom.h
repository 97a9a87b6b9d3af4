// Copyright 2026 The qgeom Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to qgeom: distances between density matrices, extremal
 * distances between unitary orbits, perfect discrimination of state sets and
 * the randomized verification ensembles.
 *
 * Objects are opaque handles created by *_from_* functions and released with
 * the matching *_free function. Every fallible call returns a qg_status; on
 * failure qg_last_error_message() describes the error for the calling thread.
 * Strings returned through `char** out` are owned by the caller and must be
 * released with qg_free_string().
 */
#ifndef QGEOM_QGEOM_H_
#define QGEOM_QGEOM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(QGEOM_BUILDING_LIBRARY)
#define QGEOM_API __attribute__((visibility("default")))
#else
#define QGEOM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qg_status {
  QG_OK = 0,
  QG_ERR_NOT_HERMITIAN = 1,
  QG_ERR_NOT_PSD = 2,
  QG_ERR_TRACE_NOT_ONE = 3,
  QG_ERR_INVALID_SPECTRUM = 4,
  QG_ERR_INVALID_STATE = 5,
  QG_ERR_NOT_UNITARY = 6,
  QG_ERR_NO_CONVERGENCE = 7,
  QG_ERR_DIMENSION_MISMATCH = 8,
  QG_ERR_DIMENSION_TOO_LARGE = 9,
  QG_ERR_INVALID_DIMENSION = 10,
  QG_ERR_INVALID_EXPONENT = 11,
  QG_ERR_INDEX_OUT_OF_RANGE = 12,
  QG_ERR_NOT_DISCRIMINABLE = 13,
  QG_ERR_EMPTY_SET = 14,
  QG_ERR_SET_TOO_LARGE = 15,
  QG_ERR_UNSUPPORTED_METRIC = 16,
  QG_ERR_INVALID_ARGUMENT = 17,
  QG_ERR_PARSE = 18,
  QG_ERR_IO = 19,
  /* An orbit report failed its own containment/attainment invariants. */
  QG_ERR_REPORT_INCONSISTENT = 20,
  QG_ERR_INTERNAL = 21
} qg_status;

typedef enum qg_metric {
  QG_METRIC_HILBERT_SCHMIDT = 0,
  QG_METRIC_TRACE = 1,
  QG_METRIC_BURES = 2
} qg_metric;

typedef enum qg_format { QG_FORMAT_JSON = 0, QG_FORMAT_CSV = 1 } qg_format;

typedef struct qg_state qg_state;         /* validated density matrix */
typedef struct qg_spectrum qg_spectrum;   /* probability vector */
typedef struct qg_state_set qg_state_set; /* ordered list of states */

QGEOM_API const char* qg_version(void);
QGEOM_API const char* qg_status_string(qg_status status);
QGEOM_API const char* qg_last_error_message(void);
QGEOM_API void qg_free_string(char* s);

/* --- states ------------------------------------------------------------- */

/* {"dim": n, "re": [[...]], "im": [[...]]}, row-major. */
QGEOM_API qg_status qg_state_from_json(const char* json, qg_state** out);
/* re, im: dim*dim row-major arrays; im may be NULL. */
QGEOM_API qg_status qg_state_from_arrays(size_t dim, const double* re,
                                         const double* im, qg_state** out);
QGEOM_API void qg_state_free(qg_state* state);
QGEOM_API size_t qg_state_dim(const qg_state* state);
/* Ascending eigenvalues; `len` must equal the dimension. */
QGEOM_API qg_status qg_state_spectrum(const qg_state* state, double* out,
                                      size_t len);
QGEOM_API qg_status qg_state_to_json(const qg_state* state, char** out);

/* {"p": [...]} */
QGEOM_API qg_status qg_spectrum_from_json(const char* json, qg_spectrum** out);
QGEOM_API qg_status qg_spectrum_from_array(const double* p, size_t len,
                                           qg_spectrum** out);
QGEOM_API void qg_spectrum_free(qg_spectrum* spectrum);
QGEOM_API size_t qg_spectrum_size(const qg_spectrum* spectrum);

/* A top-level JSON array of states, or {"states": [...]}. */
QGEOM_API qg_status qg_state_set_from_json(const char* json, qg_state_set** out);
QGEOM_API void qg_state_set_free(qg_state_set* set);
QGEOM_API size_t qg_state_set_size(const qg_state_set* set);

/* --- metrics ------------------------------------------------------------ */

QGEOM_API qg_status qg_metric_from_name(const char* name, qg_metric* out);

typedef struct qg_distance_report {
  double d_hs;
  double d_trace;
  double d_bures;
  double fidelity;
  double root_fidelity;
  double bhattacharyya; /* of the two spectra, both sorted ascending */
  double fvdg_lower;    /* 1 - sqrt(F) */
  double fvdg_upper;    /* sqrt(1 - F) */
  double support_overlap;
  int orthogonal_supports;
} qg_distance_report;

QGEOM_API qg_status qg_distances(const qg_state* a, const qg_state* b,
                                 double overlap_tol, qg_distance_report* out);
QGEOM_API qg_status qg_distance_report_json(const qg_state* a, const qg_state* b,
                                            double overlap_tol, char** out);

/* --- unitary orbits ----------------------------------------------------- */

QGEOM_API qg_status qg_orbit_bounds(const qg_spectrum* p, const qg_spectrum* q,
                                    qg_metric metric, double* lower,
                                    double* upper);
/* Fields: metric, lower, upper, oracle_min, oracle_max, argmin_perm,
 * argmax_perm, samples, seed. Returns QG_ERR_REPORT_INCONSISTENT (with the
 * report still written to `out`) if the oracle contradicts the bounds. */
QGEOM_API qg_status qg_orbit_report_json(const qg_spectrum* p,
                                         const qg_spectrum* q, qg_metric metric,
                                         uint64_t haar_samples, uint64_t seed,
                                         char** out);

/* --- discrimination ----------------------------------------------------- */

QGEOM_API qg_status qg_discriminate_json(const qg_state_set* set,
                                         double overlap_tol, int* discriminable,
                                         char** out);
QGEOM_API qg_status qg_max_distinguishable_json(const qg_state_set* set,
                                                double overlap_tol, char** out);
QGEOM_API qg_status qg_sic_simplex_side(int64_t dim, double* out);

/* --- verification ensembles --------------------------------------------- */

typedef struct qg_verify_options {
  const int64_t* dims; /* NULL: 2..6 */
  size_t n_dims;
  uint64_t samples;
  uint64_t seed;
  const char* const* properties; /* NULL: all */
  size_t n_properties;
  int has_replay_seed;
  uint64_t replay_seed;
  int corrupt_metric; /* harness self-test: inflate the trace distance */
  /* Tolerance overrides; values <= 0 keep the defaults. */
  double tol_slack;
  double tol_containment;
  double tol_monotonicity;
  double tol_equivalence;
  double tol_povm;
  double tol_overlap;
} qg_verify_options;

QGEOM_API void qg_verify_options_init(qg_verify_options* options);
/* `failures` receives a JSON array with replay data for the first failing
 * sample of each (property, dim); may be NULL. */
QGEOM_API qg_status qg_verify_run(const qg_verify_options* options,
                                  qg_format format, int* all_pass,
                                  char** report, char** failures);
/* Newline-separated property names. */
QGEOM_API qg_status qg_verify_property_names(char** out);

/* --- sampling ----------------------------------------------------------- */

QGEOM_API qg_status qg_sample_states_json(size_t dim, size_t rank, size_t count,
                                          uint64_t seed, char** out);
QGEOM_API qg_status qg_sample_unitaries_json(size_t dim, size_t count,
                                             uint64_t seed, char** out);
QGEOM_API qg_status qg_sample_spectra_json(size_t dim, size_t rank, size_t count,
                                           uint64_t seed, char** out);

#ifdef __cplusplus
}
#endif

#endif /* QGEOM_QGEOM_H_ */
