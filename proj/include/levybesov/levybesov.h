/* Copyright 2026 levybesov developers.
 * SPDX-License-Identifier: Apache-2.0 */
#ifndef LEVYBESOV_H
#define LEVYBESOV_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#    if defined(LEVYBESOV_BUILDING)
#        define LB_API __declspec(dllexport)
#    else
#        define LB_API __declspec(dllimport)
#    endif
#else
#    define LB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Nonzero values mirror levybesov::ErrorCode. */
typedef enum lb_status
{
    LB_OK = 0,
    LB_INVALID_ARGUMENT = 1,
    LB_INVALID_PARAMETER,
    LB_NO_CLOSED_FORM,
    LB_NON_CONVERGENT_QUADRATURE,
    LB_DEGENERATE_EXPONENT,
    LB_MOMENT_INFINITE,
    LB_NON_FINITE_TAIL_MASS,
    LB_UNSUPPORTED_ORDER,
    LB_NON_CONVERGENCE,
    LB_SHAPE_MISMATCH,
    LB_UNSAMPLEABLE_FAMILY,
    LB_BACKEND_FAMILY_MISMATCH,
    LB_WINDOW_TOO_SMALL,
    LB_INFINITE_MOMENT_REQUESTED,
    LB_TOO_FEW_SAMPLES,
    LB_CONFIG_PARSE,
    LB_IO_FAILURE,
    LB_INTERNAL
} lb_status;

typedef struct lb_model lb_model;
typedef struct lb_field lb_field;

typedef struct lb_indices
{
    double beta_inf;
    double beta_inf_lower;
    double p_max; /* HUGE_VAL when all moments are finite */
    double beta0;
    int heuristic;
} lb_indices;

LB_API const char* lb_version(void);
LB_API const char* lb_status_name(lb_status status);
/* Message of the last failed call on this thread; empty after success. */
LB_API const char* lb_last_error(void);

/* Model from a JSON descriptor, e.g. {"family":"SymmetricStable","alpha":1.5}. */
LB_API lb_status lb_model_create(const char* model_json, lb_model** out);
LB_API void lb_model_destroy(lb_model* model);
LB_API lb_status lb_model_indices(const lb_model* model, lb_indices* out);
/* Copies a NUL-terminated description; *needed gets the full size with NUL. */
LB_API lb_status lb_model_describe(const lb_model* model, char* buf, size_t cap, size_t* needed);
/* Psi(xi) as (re, im). */
LB_API lb_status lb_model_exponent(const lb_model* model, double xi, double* re, double* im);

/* Coefficients over [0, T]^d down to scale J. backend NULL or "auto" picks
 * from the family; wavelet_order 1 is Haar. */
LB_API lb_status lb_field_sample(const lb_model* model,
                                 int d,
                                 int T,
                                 int J,
                                 int wavelet_order,
                                 const char* backend,
                                 uint64_t seed,
                                 uint64_t replicate,
                                 lb_field** out);
LB_API void lb_field_destroy(lb_field* field);
LB_API lb_status lb_field_block_count(const lb_field* field, size_t* count);
/* Borrowed view of block i; valid until lb_field_destroy. */
LB_API lb_status lb_field_block(const lb_field* field,
                                size_t index,
                                int* j,
                                unsigned* gender,
                                const double** values,
                                size_t* count);
/* T_j for j = 0..n-1 into out (cap entries); *n gets the scale count. */
LB_API lb_status lb_field_scale_terms(const lb_field* field,
                                      double p,
                                      double tau,
                                      double rho,
                                      double* out,
                                      size_t cap,
                                      size_t* n);

/* Parse and re-serialize a configuration (canonical form, all defaults). */
LB_API lb_status lb_config_normalize(const char* config_json, char* buf, size_t cap, size_t* needed);

/* Runs a command (indices, simulate, besov, moments, verify, dirac).
 * out_dir and seed_override may be NULL; threads <= 0 uses LEVY_BESOV_THREADS.
 * *exit_code is 0 on pass and 2 when a verification check failed. */
LB_API lb_status lb_run_experiment(const char* config_json,
                                   const char* command,
                                   const char* out_dir,
                                   const uint64_t* seed_override,
                                   int threads,
                                   int* exit_code);

#ifdef __cplusplus
}
#endif

#endif
