#include "favard/curveproj.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "favard/error.hpp"
#include "favard/linproj.hpp"
#include "favard/parallel.hpp"
#include "project_common.hpp"

namespace favard {

namespace {

void require_axis(const GraphPiece& piece, Axis axis, const char* what) {
  if (piece.axis() != axis) {
    throw_precondition(std::string(what) + ": piece has the wrong axis tag");
  }
}

// Windows of a whole generation against one piece at a fixed translation
// `s` along the piece's graph direction. The generation is a product set,
// so the clipped range is computed once per graph column and shifted by
// every numerator of the other axis.
void gather_generation_windows(const GraphPiece& piece, double s, const Generation& gen,
                               Vec2 offset, std::vector<Interval>& raw) {
  const double side = gen.side();
  const bool over_x = piece.axis() == Axis::over_x;
  const double g_shift = over_x ? offset.x : offset.y;
  const double o_shift = over_x ? offset.y : offset.x;
  const auto& axis = gen.axis();
  const int n = gen.level();

  const auto [first, last] =
      detail::axis_candidates(axis, n, g_shift, s + piece.a(), s + piece.b(), side);
  for (std::size_t i = first; i < last; ++i) {
    const double g0 = std::ldexp(static_cast<double>(axis[i]), -2 * n) + g_shift;
    const auto d = detail::clip_domain(piece, s, g0, side);
    if (!d) continue;
    const Interval r = piece.range(d->lo, d->hi);
    for (std::int64_t num : axis) {
      const double o0 = std::ldexp(static_cast<double>(num), -2 * n) + o_shift;
      raw.push_back({o0 - r.hi, o0 + side - r.lo});
    }
  }
}

// Windows in beta of a whole generation against a full curve at an alpha
// column; over-y pieces go through the preimage route.
void gather_column_windows(const CurveSpec& curve, double alpha, const Generation& gen,
                           Vec2 offset, std::vector<Interval>& raw) {
  const double side = gen.side();
  const auto& axis = gen.axis();
  const int n = gen.level();
  for (const GraphPiece& piece : curve.pieces()) {
    if (piece.axis() == Axis::over_x) {
      gather_generation_windows(piece, alpha, gen, offset, raw);
      continue;
    }
    const Interval xr = piece.range(piece.a(), piece.b());
    const auto [first, last] =
        detail::axis_candidates(axis, n, offset.x, alpha + xr.lo, alpha + xr.hi, side);
    std::vector<Interval> windows;
    for (std::size_t i = first; i < last; ++i) {
      const double x0 = std::ldexp(static_cast<double>(axis[i]), -2 * n) + offset.x;
      windows.clear();
      detail::cross_windows(piece, alpha, x0, 0.0, side, windows);
      for (const Interval& w : windows) {
        for (std::int64_t num : axis) {
          const double y0 = std::ldexp(static_cast<double>(num), -2 * n) + offset.y;
          raw.push_back({w.lo + y0, w.hi + y0});
        }
      }
    }
  }
}

struct SupportRange {
  double lo;
  double hi;
};

SupportRange quadrature_support(const CurveSpec& curve, Vec2 offset, bool over_x) {
  double a_min = std::numeric_limits<double>::infinity();
  double b_max = -std::numeric_limits<double>::infinity();
  for (const GraphPiece& piece : curve.pieces()) {
    a_min = std::min(a_min, piece.a());
    b_max = std::max(b_max, piece.b());
  }
  const double base = over_x ? offset.x : offset.y;
  return {base - b_max, base + 1.0 - a_min};
}

double merged_measure(const CurveSpec& curve, double s, const Generation& gen, Vec2 offset) {
  std::vector<Interval> raw;
  for (const GraphPiece& piece : curve.pieces()) {
    gather_generation_windows(piece, s, gen, offset, raw);
  }
  return IntervalSet::from_raw(std::move(raw)).measure();
}

double quadrature_pass(const CurveSpec& curve, const Generation& gen, Vec2 offset, int points,
                       const SupportRange& support) {
  const double h = (support.hi - support.lo) / points;
  std::vector<double> values(points);
  parallel::for_range(points, [&](std::int64_t i) {
    const double s = support.lo + (static_cast<double>(i) + 0.5) * h;
    values[i] = merged_measure(curve, s, gen, offset);
  });
  return h * parallel::pairwise_sum(values);
}

}  // namespace

IntervalSet phi_alpha_set(const GraphPiece& piece, double alpha, const Generation& gen,
                          Vec2 offset) {
  require_axis(piece, Axis::over_x, "phi_alpha_set");
  std::vector<Interval> raw;
  gather_generation_windows(piece, alpha, gen, offset, raw);
  return IntervalSet::from_raw(std::move(raw));
}

IntervalSet phi_alpha_set(const GraphPiece& piece, double alpha,
                          std::span<const DyadicSquare> squares, Vec2 offset) {
  require_axis(piece, Axis::over_x, "phi_alpha_set");
  std::vector<Interval> raw;
  for (const DyadicSquare& q : squares) {
    if (auto w = detail::value_window(piece, alpha, q.x0() + offset.x, q.y0() + offset.y,
                                      q.side())) {
      raw.push_back(*w);
    }
  }
  return IntervalSet::from_raw(std::move(raw));
}

IntervalSet psi_beta_set(const GraphPiece& piece, double beta, const Generation& gen,
                         Vec2 offset) {
  require_axis(piece, Axis::over_y, "psi_beta_set");
  std::vector<Interval> raw;
  gather_generation_windows(piece, beta, gen, offset, raw);
  return IntervalSet::from_raw(std::move(raw));
}

FavardEstimate favard_curve_quadrature(const CurveSpec& curve, const Generation& gen,
                                       const QuadratureSpec& quad, Vec2 offset) {
  if (quad.points < 2) throw_argument("quadrature needs at least 2 points");
  if (quad.refinement < 1 || (quad.points >> quad.refinement) < 1) {
    throw_argument("refinement levels must leave at least one node");
  }
  if (curve.mixed()) {
    throw_precondition("mixed-axis curve: use the grid or monte-carlo estimator");
  }
  SupportRange support = quadrature_support(curve, offset, curve.all_over_x());
  if (quad.range) {
    const double slack = 1e-9 * (1.0 + std::abs(support.lo) + std::abs(support.hi));
    if (quad.range->first > support.lo + slack || quad.range->second < support.hi - slack) {
      throw_argument("quadrature range must cover the projection support");
    }
    support = {quad.range->first, quad.range->second};
  }
  const double fine = quadrature_pass(curve, gen, offset, quad.points, support);
  double indicator = 0.0;
  for (int level = 1; level <= quad.refinement; ++level) {
    const double coarse =
        quadrature_pass(curve, gen, offset, quad.points >> level, support);
    indicator = std::max(indicator, std::abs(fine - coarse));
  }
  FavardEstimate out;
  out.value = fine;
  out.error_indicator = indicator;
  out.method = EstimateMethod::quadrature;
  out.params = "points=" + std::to_string(quad.points);
  return out;
}

std::vector<std::pair<double, double>> favard_curve_quadrature_trace(const CurveSpec& curve,
                                                                     const Generation& gen,
                                                                     int points, Vec2 offset) {
  if (points < 1) throw_argument("trace needs at least 1 point");
  if (curve.mixed()) {
    throw_precondition("mixed-axis curve: use the grid or monte-carlo estimator");
  }
  const SupportRange support = quadrature_support(curve, offset, curve.all_over_x());
  const double h = (support.hi - support.lo) / points;
  std::vector<std::pair<double, double>> rows(points);
  parallel::for_range(points, [&](std::int64_t i) {
    const double s = support.lo + (static_cast<double>(i) + 0.5) * h;
    rows[i] = {s, merged_measure(curve, s, gen, offset)};
  });
  return rows;
}

FavardEstimate favard_curve_grid(const CurveSpec& curve, const Generation& gen, double pitch,
                                 Vec2 offset) {
  if (!(pitch > 0.0)) throw_argument("pitch must be positive");
  const Box cb = curve.bounding_box();
  const Box box{offset.x - cb.x1, offset.x + 1.0 - cb.x0, offset.y - cb.y1,
                offset.y + 1.0 - cb.y0};
  const std::int64_t cols = std::max<std::int64_t>(1, std::llround(std::ceil(box.width() / pitch)));
  const std::int64_t rows = std::max<std::int64_t>(1, std::llround(std::ceil(box.height() / pitch)));

  std::vector<std::int64_t> cells(cols, 0);
  std::vector<std::int64_t> components(cols, 0);
  parallel::for_range(cols, [&](std::int64_t i) {
    const double alpha = box.x0 + (static_cast<double>(i) + 0.5) * pitch;
    std::vector<Interval> raw;
    gather_column_windows(curve, alpha, gen, offset, raw);
    const IntervalSet hit = IntervalSet::from_raw(std::move(raw));
    std::int64_t count = 0;
    for (const Interval& w : hit) {
      std::int64_t jmin =
          static_cast<std::int64_t>(std::ceil((w.lo - box.y0) / pitch - 0.5));
      std::int64_t jmax =
          static_cast<std::int64_t>(std::floor((w.hi - box.y0) / pitch - 0.5));
      jmin = std::max<std::int64_t>(jmin, 0);
      jmax = std::min<std::int64_t>(jmax, rows - 1);
      if (jmax >= jmin) count += jmax - jmin + 1;
    }
    cells[i] = count;
    components[i] = static_cast<std::int64_t>(hit.size());
  });

  std::int64_t total = 0;
  double boundary = 0.0;
  for (std::int64_t i = 0; i < cols; ++i) {
    total += cells[i];
    boundary += 2.0 * static_cast<double>(components[i]) * pitch;
    if (i > 0) boundary += std::abs(static_cast<double>(cells[i] - cells[i - 1])) * pitch;
  }
  boundary += static_cast<double>(cells.front() + cells.back()) * pitch;

  FavardEstimate out;
  out.value = static_cast<double>(total) * pitch * pitch;
  out.error_indicator = boundary * pitch;
  out.method = EstimateMethod::grid;
  out.params = "pitch=" + std::to_string(pitch);
  return out;
}

std::vector<LocalComparisonRow> local_block_comparison(const CurveSpec& curve, int n,
                                                       std::int64_t block_index,
                                                       int alpha_samples) {
  if (alpha_samples < 1) throw_argument("alpha_samples must be >= 1");
  if (curve.pieces().size() != 1) {
    throw_precondition("local comparison needs a single-piece curve");
  }
  const GraphPiece& piece = curve.pieces().front();
  require_axis(piece, Axis::over_x, "local_block_comparison");
  if (piece.degenerate()) throw_precondition("curvature-zero piece");

  const HalfGenerationBlock block = half_generation_block(n, block_index);
  const double root_delta = std::ldexp(1.0, -n);  // 2^-n
  const GraphPiece extended = parabolic_extension(piece, root_delta);
  const Generation half_gen = cantor_2d(n / 2);
  const Vec2 z0 = block.members.front().center();

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const DyadicSquare& q : block.members) {
    lo = std::min(lo, q.x0() - piece.b());
    hi = std::max(hi, q.x0() + q.side() - piece.a());
  }

  std::vector<LocalComparisonRow> rows;
  rows.reserve(alpha_samples);
  for (int i = 0; i < alpha_samples; ++i) {
    const double alpha = lo + (static_cast<double>(i) + 0.5) * (hi - lo) / alpha_samples;
    const IntervalSet image = phi_alpha_set(piece, alpha, std::span(block.members));
    if (image.empty()) continue;
    const double lhs = image.measure();
    const double theta = tangent_angle_map(extended, z0, alpha);
    const double rhs = root_delta * shadow(half_gen, Angle(theta)).measure();
    rows.push_back({alpha, lhs, rhs, lhs / rhs});
  }
  return rows;
}

}  // namespace favard
