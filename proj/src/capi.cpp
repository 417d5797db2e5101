#include "favard.h"

#include <cstring>
#include <string>

#include "favard/buffon.hpp"
#include "favard/cantor.hpp"
#include "favard/curve.hpp"
#include "favard/curveproj.hpp"
#include "favard/decay.hpp"
#include "favard/error.hpp"
#include "favard/interval_set.hpp"
#include "favard/linproj.hpp"
#include "favard/pairs.hpp"
#include "favard/parallel.hpp"

struct favard_generation {
  favard::Generation impl;
};

struct favard_interval_set {
  favard::IntervalSet impl;
};

struct favard_curve {
  favard::CurveSpec impl;
};

namespace {

thread_local std::string g_last_error;

favard_status map_code(favard::ErrorCode code) {
  switch (code) {
    case favard::ErrorCode::argument:
      return FAVARD_ERROR_ARGUMENT;
    case favard::ErrorCode::precondition:
      return FAVARD_ERROR_PRECONDITION;
    case favard::ErrorCode::parse:
      return FAVARD_ERROR_PARSE;
    case favard::ErrorCode::internal:
      return FAVARD_ERROR_INTERNAL;
  }
  return FAVARD_ERROR_INTERNAL;
}

template <typename Fn>
favard_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return FAVARD_OK;
  } catch (const favard::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FAVARD_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return FAVARD_ERROR_INTERNAL;
  }
}

void require(bool ok, const char* message) {
  if (!ok) favard::throw_argument(message);
}

}  // namespace

extern "C" {

const char* favard_version(void) { return "favard 1.0.0"; }

const char* favard_last_error(void) { return g_last_error.c_str(); }

void favard_set_threads(int threads) { favard::parallel::set_thread_count(threads); }

/* ------------------------------------------------------------------ cantor */

favard_status favard_generation_create(int n, favard_generation** out) {
  return guarded([&] {
    require(out != nullptr, "out pointer is null");
    *out = new favard_generation{favard::Generation(n)};
  });
}

void favard_generation_destroy(favard_generation* gen) { delete gen; }

int favard_generation_level(const favard_generation* gen) {
  return gen ? gen->impl.level() : -1;
}

double favard_generation_side(const favard_generation* gen) {
  return gen ? gen->impl.side() : 0.0;
}

uint64_t favard_generation_square_count(const favard_generation* gen) {
  return gen ? gen->impl.square_count() : 0;
}

favard_status favard_generation_square(const favard_generation* gen, uint64_t index,
                                       int64_t* ix, int64_t* iy) {
  return guarded([&] {
    require(gen && ix && iy, "null pointer");
    const favard::DyadicSquare q = gen->impl.square(index);
    *ix = q.ix;
    *iy = q.iy;
  });
}

favard_status favard_block_count(int n, int64_t* count) {
  return guarded([&] {
    require(count != nullptr, "out pointer is null");
    *count = favard::half_generation_block_count(n);
  });
}

favard_status favard_dyadic_decimal(int64_t num, int n, char* buf, size_t capacity) {
  return guarded([&] {
    require(buf != nullptr, "buffer is null");
    const std::string text = favard::dyadic_decimal(num, n);
    require(capacity > text.size(), "buffer too small");
    std::memcpy(buf, text.c_str(), text.size() + 1);
  });
}

/* ----------------------------------------------------------- interval sets */

void favard_interval_set_destroy(favard_interval_set* set) { delete set; }

size_t favard_interval_set_size(const favard_interval_set* set) {
  return set ? set->impl.size() : 0;
}

double favard_interval_set_measure(const favard_interval_set* set) {
  return set ? set->impl.measure() : 0.0;
}

favard_status favard_interval_set_component(const favard_interval_set* set, size_t index,
                                            double* lo, double* hi) {
  return guarded([&] {
    require(set && lo && hi, "null pointer");
    require(index < set->impl.size(), "component index out of range");
    *lo = set->impl[index].lo;
    *hi = set->impl[index].hi;
  });
}

/* ------------------------------------------------------------------ linproj */

favard_status favard_shadow(const favard_generation* gen, double theta,
                            favard_interval_set** out) {
  return guarded([&] {
    require(gen && out, "null pointer");
    *out = new favard_interval_set{favard::shadow(gen->impl, favard::Angle(theta))};
  });
}

favard_status favard_intercept_shadow(const favard_generation* gen, double slope,
                                      favard_interval_set** out) {
  return guarded([&] {
    require(gen && out, "null pointer");
    *out = new favard_interval_set{favard::intercept_shadow(gen->impl, slope)};
  });
}

favard_status favard_fav_linear(const favard_generation* gen, int quad_points, double* value,
                                double* error) {
  return guarded([&] {
    require(gen && value && error, "null pointer");
    const favard::FavardEstimate est =
        favard::favard_length(gen->impl, favard::QuadratureSpec{quad_points});
    *value = est.value;
    *error = est.error_indicator;
  });
}

favard_status favard_fav_linear_trace(const favard_generation* gen, int quad_points,
                                      double* thetas, double* measures) {
  return guarded([&] {
    require(gen && thetas && measures, "null pointer");
    const auto rows = favard::favard_length_trace(gen->impl, quad_points);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      thetas[i] = rows[i].first;
      measures[i] = rows[i].second;
    }
  });
}

/* ------------------------------------------------------------------- curves */

favard_status favard_curve_parse(const char* spec, favard_curve** out) {
  return guarded([&] {
    require(spec && out, "null pointer");
    *out = new favard_curve{favard::parse_curve(spec)};
  });
}

void favard_curve_destroy(favard_curve* curve) { delete curve; }

size_t favard_curve_piece_count(const favard_curve* curve) {
  return curve ? curve->impl.pieces().size() : 0;
}

double favard_curve_arclength(const favard_curve* curve) {
  return curve ? curve->impl.length() : 0.0;
}

favard_status favard_curve_axis(const favard_curve* curve, int* axis) {
  return guarded([&] {
    require(curve && axis, "null pointer");
    *axis = curve->impl.all_over_x() ? 0 : (curve->impl.all_over_y() ? 1 : 2);
  });
}

const char* favard_curve_grammar(void) { return favard::curve_grammar(); }

/* --------------------------------------------------- favard curve estimates */

favard_status favard_favc_quadrature(const favard_generation* gen, const favard_curve* curve,
                                     int quad_points, double* value, double* error) {
  return guarded([&] {
    require(gen && curve && value && error, "null pointer");
    const favard::FavardEstimate est = favard::favard_curve_quadrature(
        curve->impl, gen->impl, favard::QuadratureSpec{quad_points});
    *value = est.value;
    *error = est.error_indicator;
  });
}

favard_status favard_favc_quadrature_trace(const favard_generation* gen,
                                           const favard_curve* curve, int quad_points,
                                           double* alphas, double* measures) {
  return guarded([&] {
    require(gen && curve && alphas && measures, "null pointer");
    const auto rows =
        favard::favard_curve_quadrature_trace(curve->impl, gen->impl, quad_points);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      alphas[i] = rows[i].first;
      measures[i] = rows[i].second;
    }
  });
}

favard_status favard_favc_grid(const favard_generation* gen, const favard_curve* curve,
                               double pitch, double* value, double* error) {
  return guarded([&] {
    require(gen && curve && value && error, "null pointer");
    const favard::FavardEstimate est =
        favard::favard_curve_grid(curve->impl, gen->impl, pitch);
    *value = est.value;
    *error = est.error_indicator;
  });
}

favard_status favard_favc_mc(const favard_generation* gen, const favard_curve* curve,
                             uint64_t samples, uint64_t seed, double* value, double* error) {
  return guarded([&] {
    require(gen && curve && value && error, "null pointer");
    const favard::FavardEstimate est =
        favard::mc_favard_curve(gen->impl, curve->impl, samples, favard::RngSpec{seed, 0});
    *value = est.value;
    *error = est.error_indicator;
  });
}

/* ------------------------------------------------------------------- buffon */

favard_status favard_square_hits_curve(int n, int64_t ix, int64_t iy,
                                       const favard_curve* curve, double z1, double z2,
                                       int* hit) {
  return guarded([&] {
    require(curve && hit, "null pointer");
    require(n >= 0 && n <= favard::kMaxGeneration, "generation out of range");
    const favard::DyadicSquare q{n, ix, iy};
    *hit = favard::square_hits_curve(q, curve->impl, {z1, z2}) ? 1 : 0;
  });
}

favard_status favard_counting_function(const favard_generation* gen,
                                       const favard_curve* curve, double z1, double z2,
                                       int64_t* count) {
  return guarded([&] {
    require(gen && curve && count, "null pointer");
    *count = favard::counting_function(gen->impl, curve->impl, {z1, z2});
  });
}

favard_status favard_moment(const favard_generation* gen, const favard_curve* curve,
                            int order, uint64_t samples, uint64_t seed, double* value,
                            double* std_error) {
  return guarded([&] {
    require(gen && curve && value && std_error, "null pointer");
    const favard::MomentResult m =
        favard::moment_estimate(gen->impl, curve->impl, order, samples, favard::RngSpec{seed, 0});
    *value = m.value;
    *std_error = m.std_error;
  });
}

favard_status favard_mc_trace(const favard_generation* gen, const favard_curve* curve,
                              uint64_t samples, uint64_t seed, double* z1, double* z2,
                              int64_t* counts) {
  return guarded([&] {
    require(gen && curve && z1 && z2 && counts, "null pointer");
    const auto rows =
        favard::mc_samples(gen->impl, curve->impl, samples, favard::RngSpec{seed, 0});
    for (std::size_t i = 0; i < rows.size(); ++i) {
      z1[i] = rows[i].z.x;
      z2[i] = rows[i].z.y;
      counts[i] = rows[i].hit_count;
    }
  });
}

favard_status favard_pair_overlap(int n, int64_t ix_i, int64_t iy_i, int64_t ix_j,
                                  int64_t iy_j, const favard_curve* curve, double pitch,
                                  double* value) {
  return guarded([&] {
    require(curve && value, "null pointer");
    require(n >= 0 && n <= favard::kMaxGeneration, "generation out of range");
    *value = favard::pair_overlap({n, ix_i, iy_i}, {n, ix_j, iy_j}, curve->impl, pitch);
  });
}

/* -------------------------------------------------------------------- pairs */

favard_status favard_classify_1d(int n, int64_t num1, int64_t num2, int* k) {
  return guarded([&] {
    require(k != nullptr, "out pointer is null");
    *k = favard::classify_1d({n, num1}, {n, num2});
  });
}

favard_status favard_classify_2d(int n, int64_t ix_i, int64_t iy_i, int64_t ix_j,
                                 int64_t iy_j, int* k, int* ell) {
  return guarded([&] {
    require(k && ell, "null pointer");
    const favard::PairClass c = favard::classify_2d({n, ix_i, iy_i}, {n, ix_j, iy_j});
    *k = c.k;
    *ell = c.ell;
  });
}

favard_status favard_pair_counts_1d(int n, int exhaustive, int64_t* counts) {
  return guarded([&] {
    require(counts != nullptr, "out pointer is null");
    const auto result = favard::count_pairs_1d(n, exhaustive != 0);
    for (std::size_t i = 0; i < result.size(); ++i) counts[i] = result[i];
  });
}

favard_status favard_pair_counts_2d(int n, int exhaustive, int64_t* counts) {
  return guarded([&] {
    require(counts != nullptr, "out pointer is null");
    const auto result = favard::count_pairs_2d(n, exhaustive != 0);
    for (std::size_t i = 0; i < result.size(); ++i) counts[i] = result[i];
  });
}

favard_status favard_l2_bound_assembly(int n, double overlap_constant, double* value) {
  return guarded([&] {
    require(value != nullptr, "out pointer is null");
    *value = favard::l2_bound_assembly(n, overlap_constant);
  });
}

/* --------------------------------------------------------- local comparison */

favard_status favard_local_block_comparison(const favard_curve* curve, int n,
                                            int64_t block_index, int alpha_samples,
                                            double* rows, int* rows_written) {
  return guarded([&] {
    require(curve && rows && rows_written, "null pointer");
    const auto result =
        favard::local_block_comparison(curve->impl, n, block_index, alpha_samples);
    for (std::size_t i = 0; i < result.size(); ++i) {
      rows[4 * i + 0] = result[i].alpha;
      rows[4 * i + 1] = result[i].lhs;
      rows[4 * i + 2] = result[i].rhs;
      rows[4 * i + 3] = result[i].ratio;
    }
    *rows_written = static_cast<int>(result.size());
  });
}

/* -------------------------------------------------------------- decay fit */

favard_status favard_fit_decay(const double* n_values, const double* values, size_t count,
                               double* exponent, double* intercept, double* r_squared,
                               double* min_n_times_value) {
  return guarded([&] {
    require(n_values && values && exponent && intercept && r_squared && min_n_times_value,
            "null pointer");
    std::vector<std::pair<double, double>> points;
    points.reserve(count);
    for (size_t i = 0; i < count; ++i) points.emplace_back(n_values[i], values[i]);
    const favard::DecayFit fit = favard::fit_decay(points);
    *exponent = fit.exponent;
    *intercept = fit.intercept;
    *r_squared = fit.r_squared;
    *min_n_times_value = fit.min_n_times_value;
  });
}

}  // extern "C"
