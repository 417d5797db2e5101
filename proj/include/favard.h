/*
 * C interface to the favard library: exact four-corner Cantor generations,
 * orthogonal and curve projections, Favard and Favard-curve length
 * estimators, Buffon drop simulation, and pair combinatorics.
 *
 * All functions return FAVARD_OK on success; on failure the out-parameters
 * are left untouched and favard_last_error() describes the problem for the
 * calling thread. Handles are opaque and must be released with the
 * matching *_destroy call.
 */
#ifndef FAVARD_H
#define FAVARD_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum favard_status {
  FAVARD_OK = 0,
  FAVARD_ERROR_ARGUMENT = 1,
  FAVARD_ERROR_PRECONDITION = 2,
  FAVARD_ERROR_PARSE = 3,
  FAVARD_ERROR_INTERNAL = 4
} favard_status;

const char* favard_version(void);
const char* favard_last_error(void);

/* 0 restores the automatic default (FAVARD_THREADS or hardware). */
void favard_set_threads(int threads);

/* --------------------------------------------------------------- cantor */

typedef struct favard_generation favard_generation;

favard_status favard_generation_create(int n, favard_generation** out);
void favard_generation_destroy(favard_generation* gen);
int favard_generation_level(const favard_generation* gen);
double favard_generation_side(const favard_generation* gen);
uint64_t favard_generation_square_count(const favard_generation* gen);
favard_status favard_generation_square(const favard_generation* gen, uint64_t index,
                                       int64_t* ix, int64_t* iy);
favard_status favard_block_count(int n, int64_t* count);

/* Exact decimal rendering of num * 4^-n into buf (NUL-terminated). */
favard_status favard_dyadic_decimal(int64_t num, int n, char* buf, size_t capacity);

/* -------------------------------------------------------- interval sets */

typedef struct favard_interval_set favard_interval_set;

void favard_interval_set_destroy(favard_interval_set* set);
size_t favard_interval_set_size(const favard_interval_set* set);
double favard_interval_set_measure(const favard_interval_set* set);
favard_status favard_interval_set_component(const favard_interval_set* set, size_t index,
                                            double* lo, double* hi);

/* ------------------------------------------------------------- linproj */

favard_status favard_shadow(const favard_generation* gen, double theta,
                            favard_interval_set** out);
favard_status favard_intercept_shadow(const favard_generation* gen, double slope,
                                      favard_interval_set** out);
favard_status favard_fav_linear(const favard_generation* gen, int quad_points, double* value,
                                double* error);
/* quad_points rows of (theta, measure) spanning [0, pi). */
favard_status favard_fav_linear_trace(const favard_generation* gen, int quad_points,
                                      double* thetas, double* measures);

/* --------------------------------------------------------------- curves */

typedef struct favard_curve favard_curve;

favard_status favard_curve_parse(const char* spec, favard_curve** out);
void favard_curve_destroy(favard_curve* curve);
size_t favard_curve_piece_count(const favard_curve* curve);
double favard_curve_arclength(const favard_curve* curve);
/* 0: every piece over-x, 1: every piece over-y, 2: mixed. */
favard_status favard_curve_axis(const favard_curve* curve, int* axis);
const char* favard_curve_grammar(void);

/* ---------------------------------------------- favard curve estimators */

favard_status favard_favc_quadrature(const favard_generation* gen, const favard_curve* curve,
                                     int quad_points, double* value, double* error);
favard_status favard_favc_quadrature_trace(const favard_generation* gen,
                                           const favard_curve* curve, int quad_points,
                                           double* alphas, double* measures);
favard_status favard_favc_grid(const favard_generation* gen, const favard_curve* curve,
                               double pitch, double* value, double* error);
favard_status favard_favc_mc(const favard_generation* gen, const favard_curve* curve,
                             uint64_t samples, uint64_t seed, double* value, double* error);

/* --------------------------------------------------------------- buffon */

favard_status favard_square_hits_curve(int n, int64_t ix, int64_t iy,
                                       const favard_curve* curve, double z1, double z2,
                                       int* hit);
favard_status favard_counting_function(const favard_generation* gen,
                                       const favard_curve* curve, double z1, double z2,
                                       int64_t* count);
favard_status favard_moment(const favard_generation* gen, const favard_curve* curve,
                            int order, uint64_t samples, uint64_t seed, double* value,
                            double* std_error);
/* samples rows of (z1, z2, f_n(z)); the same drop stream the estimators use. */
favard_status favard_mc_trace(const favard_generation* gen, const favard_curve* curve,
                              uint64_t samples, uint64_t seed, double* z1, double* z2,
                              int64_t* counts);
favard_status favard_pair_overlap(int n, int64_t ix_i, int64_t iy_i, int64_t ix_j,
                                  int64_t iy_j, const favard_curve* curve, double pitch,
                                  double* value);

/* ---------------------------------------------------------------- pairs */

favard_status favard_classify_1d(int n, int64_t num1, int64_t num2, int* k);
favard_status favard_classify_2d(int n, int64_t ix_i, int64_t iy_i, int64_t ix_j,
                                 int64_t iy_j, int* k, int* ell);
/* counts buffer: n+1 entries (1-d) or (n+1)*(n+1) row-major in k (2-d). */
favard_status favard_pair_counts_1d(int n, int exhaustive, int64_t* counts);
favard_status favard_pair_counts_2d(int n, int exhaustive, int64_t* counts);
favard_status favard_l2_bound_assembly(int n, double overlap_constant, double* value);

/* ------------------------------------------------------ local comparison */

/* alpha_samples rows of (alpha, lhs, rhs, ratio), row-major; rows_written
 * may be smaller when the block misses some sampled alpha. */
favard_status favard_local_block_comparison(const favard_curve* curve, int n,
                                            int64_t block_index, int alpha_samples,
                                            double* rows, int* rows_written);

/* ------------------------------------------------------------ decay fit */

favard_status favard_fit_decay(const double* n_values, const double* values, size_t count,
                               double* exponent, double* intercept, double* r_squared,
                               double* min_n_times_value);

#ifdef __cplusplus
}
#endif

#endif /* FAVARD_H */
