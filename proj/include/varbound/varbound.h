/*
 * Copyright 2026 The varbound Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libvarbound.
 *
 * Objects are opaque handles created by vb_*_create / vb_*_from_* and
 * released with the matching vb_*_destroy. Every fallible call returns a
 * vb_status; on failure a human-readable message for the calling thread is
 * available from vb_last_error() until the next failing call on that thread.
 * Handles are immutable after construction (observable sets excepted) and
 * may be shared across threads for reading.
 *
 * Complex matrices cross the boundary as dim*dim*2 doubles, row-major,
 * with real and imaginary parts interleaved.
 */

#ifndef VARBOUND_H
#define VARBOUND_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(VARBOUND_BUILDING)
#    define VB_API __declspec(dllexport)
#  else
#    define VB_API __declspec(dllimport)
#  endif
#else
#  define VB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vb_status {
  VB_OK = 0,
  VB_ERR_NOT_HERMITIAN = 1,
  VB_ERR_NOT_SQUARE = 2,
  VB_ERR_NON_FINITE = 3,
  VB_ERR_NEGATIVE_EIGENVALUE = 4,
  VB_ERR_SHAPE_MISMATCH = 5,
  VB_ERR_BLOCH_NORM_EXCEEDED = 6,
  VB_ERR_TRACE_NOT_ONE = 7,
  VB_ERR_NOT_PSD = 8,
  VB_ERR_DIM_MISMATCH = 9,
  VB_ERR_EMPTY_SET = 10,
  VB_ERR_NEED_AT_LEAST_TWO = 11,
  VB_ERR_NEED_AT_LEAST_THREE = 12,
  VB_ERR_ALL_COMPATIBLE = 13,
  VB_ERR_ALL_COVARIANCES_VANISH = 14,
  VB_ERR_COMMUTATOR_STRUCTURE_VIOLATED = 15,
  VB_ERR_BAD_RANK = 16,
  VB_ERR_INVALID_ARGUMENT = 17,
  VB_ERR_PARSE = 18,
  VB_ERR_IO = 19,
  /* Returned by vb_eval_file when the report was written but one or more
     bounds were degenerate. */
  VB_ERR_DEGENERATE_BOUND = 100,
  /* Returned by vb_run_verify when at least one check failed. */
  VB_ERR_VERIFICATION_FAILED = 101,
  VB_ERR_NULL_ARGUMENT = 102,
  VB_ERR_INTERNAL = 199
} vb_status;

typedef struct vb_state vb_state;
typedef struct vb_observable vb_observable;
typedef struct vb_observable_set vb_observable_set;

/* Error reporting */
VB_API const char* vb_status_name(vb_status status);
VB_API const char* vb_last_error(void);
VB_API const char* vb_version(void);

/* States */
VB_API vb_status vb_state_from_bloch(double x, double y, double z, vb_state** out);
VB_API vb_status vb_state_from_matrix(size_t dim, const double* re_im, vb_state** out);
VB_API void vb_state_destroy(vb_state* state);
VB_API size_t vb_state_dim(const vb_state* state);
/* Writes dim*dim*2 doubles. */
VB_API vb_status vb_state_rho(const vb_state* state, double* re_im_out);

/* Observables */
VB_API vb_status vb_observable_pauli(const char* name, vb_observable** out);
VB_API vb_status vb_observable_from_matrix(const char* label, size_t dim, const double* re_im,
                                           vb_observable** out);
VB_API void vb_observable_destroy(vb_observable* obs);
VB_API size_t vb_observable_dim(const vb_observable* obs);

/* Observable sets (ordered; vb_observable_set_push copies the observable) */
VB_API vb_status vb_observable_set_create(vb_observable_set** out);
VB_API vb_status vb_observable_set_push(vb_observable_set* set, const vb_observable* obs);
VB_API size_t vb_observable_set_size(const vb_observable_set* set);
VB_API void vb_observable_set_destroy(vb_observable_set* set);

/* Moments */
VB_API vb_status vb_expectation(const vb_state* s, const vb_observable* a, double* out);
VB_API vb_status vb_variance(const vb_state* s, const vb_observable* a, double* out);

/* Bounds. Degenerate denominators return VB_ERR_ALL_COMPATIBLE or
   VB_ERR_ALL_COVARIANCES_VANISH and leave the outputs untouched. */
VB_API vb_status vb_lambda_max(const vb_state* s, const vb_observable_set* obs, double* out);
VB_API vb_status vb_sigma_max(const vb_state* s, const vb_observable_set* a,
                              const vb_observable_set* b, double* out);
VB_API vb_status vb_sum_of_variances(const vb_state* s, const vb_observable_set* obs, double* out);
VB_API vb_status vb_product_lhs(const vb_state* s, const vb_observable_set* a,
                                const vb_observable_set* b, double* out);
VB_API vb_status vb_bound_thm1(const vb_state* s, const vb_observable_set* obs, double* out);
VB_API vb_status vb_bound_maccone(const vb_state* s, const vb_observable* a, const vb_observable* b,
                                  double* out);
VB_API vb_status vb_bound_chen_fei(const vb_state* s, const vb_observable_set* obs, double* out);
VB_API vb_status vb_pair_bounds(const vb_state* s, const vb_observable* a, const vb_observable* b,
                                double* rur, double* sur);
VB_API vb_status vb_bound_thm2(const vb_state* s, const vb_observable_set* a,
                               const vb_observable_set* b, double* out);
VB_API vb_status vb_bound_cor2(const vb_state* s, const vb_observable_set* a,
                               const vb_observable_set* b, double* out);
VB_API vb_status vb_bound_c22(const vb_state* s, const vb_observable_set* a,
                              const vb_observable_set* b, double* out);
VB_API vb_status vb_bound_cor3(const vb_state* s, const vb_observable_set* obs, double* cor3,
                               double* pairwise_rur);
VB_API vb_status vb_bound_pati(const vb_state* s, const vb_observable_set* a,
                               const vb_observable_set* b, const vb_observable* c, double* lhs,
                               double* rhs);

/* File-level drivers behind the command-line tool. */
VB_API vb_status vb_eval_file(const char* scenario_path, const char* out_path);
VB_API vb_status vb_sweep_file(const char* spec_path, const char* out_path);
/* id is "fig1", "fig2" or "fig3"; points >= 2. */
VB_API vb_status vb_figure_file(const char* id, int points, const char* out_path);

typedef struct vb_verify_options {
  uint64_t seed;
  int trials;
  int dim_min;
  int dim_max;
  int set_min;
  int set_max;
  int threads;
} vb_verify_options;

/* Fills defaults: seed 42, 1000 trials, dims 2..4, set sizes 2..4, 1 thread. */
VB_API void vb_verify_options_init(vb_verify_options* opts);

/* Runs the randomized suite. When out_path is non-NULL every check is written
   there as CSV. *summary receives a malloc'd text summary to be released with
   vb_string_free. Returns VB_ERR_VERIFICATION_FAILED if any check failed. */
VB_API vb_status vb_run_verify(const vb_verify_options* opts, const char* out_path, char** summary);
VB_API void vb_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* VARBOUND_H */
