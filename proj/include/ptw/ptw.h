/* Copyright 2026 The ptw Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to libptw. Every fallible call returns a ptw_status; on failure
 * ptw_last_error() describes the problem for the calling thread. Strings
 * returned through char** out-parameters are owned by the caller and released
 * with ptw_free. Handles are released with their matching *_destroy call,
 * which accepts NULL.
 */

#ifndef PTW_PTW_H
#define PTW_PTW_H

#include <stddef.h>

#if defined(PTW_BUILDING_LIBRARY)
#define PTW_API __attribute__((visibility("default")))
#else
#define PTW_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ptw_status {
  PTW_OK = 0,
  PTW_INVALID_ARGUMENT = 1,
  PTW_PRECISION_EXHAUSTED = 2,
  PTW_INTEGRATION_FAILURE = 3,
  PTW_OUT_OF_RANGE = 4,
  PTW_INTERNAL_ERROR = 5
} ptw_status;

typedef enum ptw_format { PTW_FORMAT_CSV = 0, PTW_FORMAT_JSON = 1, PTW_FORMAT_TEXT = 2 } ptw_format;

PTW_API const char* ptw_version(void);
PTW_API const char* ptw_last_error(void);
PTW_API const char* ptw_status_name(ptw_status status);
PTW_API void ptw_free(void* p);

/* ---- Toeplitz determinant and corner quantities at one (n, t) ---------- */

typedef struct ptw_corners ptw_corners;

/* t is a decimal literal, read at `bits` of precision (>= 64). */
PTW_API ptw_status ptw_corners_solve(int n, const char* t, long bits, ptw_corners** out);
PTW_API ptw_status ptw_corners_u(const ptw_corners* c, double* U_n);
PTW_API ptw_status ptw_corners_log_det(const ptw_corners* c, double* log_d);
/* PTW_FORMAT_TEXT or PTW_FORMAT_JSON. */
PTW_API ptw_status ptw_corners_format(const ptw_corners* c, ptw_format fmt, int digits, char** out);
PTW_API void ptw_corners_destroy(ptw_corners* c);

/* ---- U_1..U_n_max at fixed t ------------------------------------------- */

typedef enum ptw_useq_method {
  PTW_USEQ_LEVINSON = 0, /* reflection coefficients with log D_k */
  PTW_USEQ_DIRECT = 1,   /* independent direct solve for every k */
  PTW_USEQ_DPII = 2      /* discrete Painleve II from direct-solve seeds */
} ptw_useq_method;

typedef struct ptw_useq ptw_useq;

PTW_API ptw_status ptw_useq_compute(int n_max, const char* t, long bits, ptw_useq_method method,
                                    ptw_useq** out);
PTW_API int ptw_useq_size(const ptw_useq* s);
/* Largest |U_k| relative difference between two sequences over common k. */
PTW_API ptw_status ptw_useq_max_relative_difference(const ptw_useq* a, const ptw_useq* b,
                                                    double* out);
/* Largest |(k/t) U_k + (1 - U_k^2)(U_{k-1} + U_{k+1})| / |(k/t) U_k| over
 * 2 <= k < size. */
PTW_API ptw_status ptw_useq_max_recurrence_residual(const ptw_useq* s, double* out);
/* First index with |U_k| >= 1 for the DPII method, else 0. */
PTW_API int ptw_useq_first_unstable(const ptw_useq* s);
PTW_API ptw_status ptw_useq_format(const ptw_useq* s, ptw_format fmt, int digits, char** out);
PTW_API void ptw_useq_destroy(ptw_useq* s);

/* ---- Painleve V / III trajectories -------------------------------------- */

typedef struct ptw_trajectory ptw_trajectory;

typedef enum ptw_piii_start { PTW_PIII_SERIES = 0, PTW_PIII_TOEPLITZ = 1 } ptw_piii_start;

PTW_API ptw_status ptw_pv_integrate(int n, double t0, double t1, double tol, size_t samples,
                                    ptw_trajectory** out);
PTW_API ptw_status ptw_piii_integrate(int n, double t0, double t1, double tol, size_t samples,
                                      ptw_piii_start start, ptw_trajectory** out);
/* Largest |trajectory - Toeplitz value| over the samples. */
PTW_API ptw_status ptw_trajectory_max_deviation(const ptw_trajectory* tr, double* out);
/* Largest equation residual of the Toeplitz-derived function at the samples. */
PTW_API ptw_status ptw_trajectory_max_residual(const ptw_trajectory* tr, double* out);
PTW_API ptw_status ptw_trajectory_format(const ptw_trajectory* tr, ptw_format fmt, char** out);
PTW_API void ptw_trajectory_destroy(ptw_trajectory* tr);

/* Residual checks of the Toeplitz-derived functions at one t. */
PTW_API ptw_status ptw_pv_residual(int n, double t, double* out);
PTW_API ptw_status ptw_piii_residual(int n, double t, double* out);
/* Three derivative identities for U_n, written to out[0..2]. */
PTW_API ptw_status ptw_derivative_residuals(int n, double t, double* out);

/* ---- Painleve II and Tracy-Widom ---------------------------------------- */

typedef struct ptw_pii ptw_pii;

PTW_API ptw_status ptw_airy(double s, double* ai, double* dai);
PTW_API ptw_status ptw_pii_integrate(double s0, double s_min, double tol, double step,
                                     ptw_pii** out);
PTW_API ptw_status ptw_pii_q(const ptw_pii* p, double s, double* q);
PTW_API ptw_status ptw_pii_F(const ptw_pii* p, double s, double* F);
PTW_API ptw_status ptw_pii_format(const ptw_pii* p, ptw_format fmt, char** out);
PTW_API void ptw_pii_destroy(ptw_pii* p);

typedef struct ptw_dist ptw_dist;

typedef struct ptw_stats {
  double mean;
  double stddev;
  double skewness;
  double excess_kurtosis;
  double mass;
} ptw_stats;

/* Grids for F and F_O = F^2, clipped to [s_lo, s_hi]. */
PTW_API ptw_status ptw_dist_build(const ptw_pii* p, double s_lo, double s_hi, ptw_dist** out);
PTW_API ptw_status ptw_dist_stats(const ptw_dist* d, int odd, ptw_stats* out);
PTW_API ptw_status ptw_dist_quantile(const ptw_dist* d, int odd, double prob, double* out);
PTW_API ptw_status ptw_dist_cdf(const ptw_dist* d, int odd, double s, double* out);
/* CSV/JSON: the grid. TEXT: the moment table. */
PTW_API ptw_status ptw_dist_format(const ptw_dist* d, ptw_format fmt, char** out);
PTW_API void ptw_dist_destroy(ptw_dist* d);

/* ---- Permutation censuses and identity reports -------------------------- */

typedef enum ptw_group { PTW_GROUP_SYMMETRIC = 0, PTW_GROUP_ODD = 1 } ptw_group;

typedef struct ptw_census ptw_census;

/* One census per N in [N_min, N_max]. */
PTW_API ptw_status ptw_census_compute(ptw_group group, int N_min, int N_max, ptw_census** out);
/* #{sigma in the census for N : lis(sigma) <= n}. */
PTW_API ptw_status ptw_census_count(const ptw_census* c, int N, int n, unsigned long long* out);
PTW_API ptw_status ptw_census_format(const ptw_census* c, ptw_format fmt, char** out);
PTW_API void ptw_census_destroy(ptw_census* c);

typedef struct ptw_report ptw_report;

PTW_API ptw_status ptw_verify_generating(int n_max, int N_max, ptw_report** out);
PTW_API ptw_status ptw_verify_monotonicity(ptw_group group, int N_max, ptw_report** out);
PTW_API ptw_status ptw_depoisson(int n, int k_max, ptw_report** out);
PTW_API size_t ptw_report_checks(const ptw_report* r);
PTW_API size_t ptw_report_failures(const ptw_report* r);
PTW_API ptw_status ptw_report_format(const ptw_report* r, ptw_format fmt, char** out);
PTW_API void ptw_report_destroy(ptw_report* r);

/* ---- Limit-law experiments ---------------------------------------------- */

typedef enum ptw_experiment {
  PTW_EXPERIMENT_BDJ = 0,
  PTW_EXPERIMENT_ODD_G = 1,
  PTW_EXPERIMENT_ODD_G_EVEN = 2,
  PTW_EXPERIMENT_ODD_G_ODD = 3,
  PTW_EXPERIMENT_ODD_H_EVEN = 4,
  PTW_EXPERIMENT_USCALE = 5
} ptw_experiment;

typedef struct ptw_table ptw_table;

PTW_API ptw_status ptw_experiment_run(ptw_experiment kind, const double* s, size_t ns,
                                      const double* t, size_t nt, long bits, const ptw_pii* p,
                                      ptw_table** out);
PTW_API size_t ptw_table_rows(const ptw_table* tb);
/* Absolute error (limit tables) or ratio (scaling table) of row i. */
PTW_API ptw_status ptw_table_value(const ptw_table* tb, size_t i, double* out);
PTW_API ptw_status ptw_table_format(const ptw_table* tb, ptw_format fmt, char** out);
PTW_API void ptw_table_destroy(ptw_table* tb);

#ifdef __cplusplus
}
#endif

#endif /* PTW_PTW_H */
