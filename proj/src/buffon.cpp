#include "favard/buffon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "favard/error.hpp"
#include "favard/interval_set.hpp"
#include "favard/parallel.hpp"
#include "project_common.hpp"

namespace favard {

namespace {

bool piece_hits(const GraphPiece& piece, double x0, double y0, double side, Vec2 z) {
  if (piece.axis() == Axis::over_x) {
    const auto w = detail::value_window(piece, z.x, x0, y0, side);
    return w && w->lo <= z.y && z.y <= w->hi;
  }
  const auto w = detail::value_window(piece, z.y, y0, x0, side);
  return w && w->lo <= z.x && z.x <= w->hi;
}

bool curve_hits(const CurveSpec& curve, double x0, double y0, double side, Vec2 z) {
  for (const GraphPiece& piece : curve.pieces()) {
    if (piece_hits(piece, x0, y0, side, z)) return true;
  }
  return false;
}

// Visits every pruned candidate square hit by the curve at z; `visit`
// returns false to stop early.
template <typename Visit>
void scan_hits(const Generation& gen, const CurveSpec& curve, Vec2 z, Vec2 offset,
               Visit&& visit) {
  const double side = gen.side();
  const auto& axis = gen.axis();
  const int n = gen.level();
  const Box cb = curve.bounding_box();

  // Fast path: a single over-x (or over-y) piece factors per graph column.
  if (curve.pieces().size() == 1) {
    const GraphPiece& piece = curve.pieces().front();
    const bool over_x = piece.axis() == Axis::over_x;
    const double g_shift = over_x ? offset.x : offset.y;
    const double o_shift = over_x ? offset.y : offset.x;
    const double g_pos = over_x ? z.x : z.y;
    const double o_pos = over_x ? z.y : z.x;
    const auto [first, last] =
        detail::axis_candidates(axis, n, g_shift, g_pos + piece.a(), g_pos + piece.b(), side);
    for (std::size_t i = first; i < last; ++i) {
      const double g0 = std::ldexp(static_cast<double>(axis[i]), -2 * n) + g_shift;
      const auto d = detail::clip_domain(piece, g_pos, g0, side);
      if (!d) continue;
      const Interval r = piece.range(d->lo, d->hi);
      const auto [ofirst, olast] =
          detail::axis_candidates(axis, n, o_shift, o_pos + r.lo, o_pos + r.hi, side);
      for (std::size_t j = ofirst; j < olast; ++j) {
        const double o0 = std::ldexp(static_cast<double>(axis[j]), -2 * n) + o_shift;
        if (o0 - r.hi <= o_pos && o_pos <= o0 + side - r.lo) {
          const bool keep = over_x ? visit(i, j) : visit(j, i);
          if (!keep) return;
        }
      }
    }
    return;
  }

  const auto [xfirst, xlast] =
      detail::axis_candidates(axis, n, offset.x, z.x + cb.x0, z.x + cb.x1, side);
  const auto [yfirst, ylast] =
      detail::axis_candidates(axis, n, offset.y, z.y + cb.y0, z.y + cb.y1, side);
  for (std::size_t i = xfirst; i < xlast; ++i) {
    const double x0 = std::ldexp(static_cast<double>(axis[i]), -2 * n) + offset.x;
    for (std::size_t j = yfirst; j < ylast; ++j) {
      const double y0 = std::ldexp(static_cast<double>(axis[j]), -2 * n) + offset.y;
      if (curve_hits(curve, x0, y0, side, z)) {
        if (!visit(i, j)) return;
      }
    }
  }
}

bool any_hit(const Generation& gen, const CurveSpec& curve, Vec2 z, Vec2 offset = {}) {
  bool hit = false;
  scan_hits(gen, curve, z, offset, [&](std::size_t, std::size_t) {
    hit = true;
    return false;
  });
  return hit;
}

constexpr std::uint64_t kChunk = 1 << 16;

}  // namespace

bool square_hits_curve(const DyadicSquare& square, const CurveSpec& curve, Vec2 z,
                       Vec2 offset) {
  return curve_hits(curve, square.x0() + offset.x, square.y0() + offset.y, square.side(), z);
}

std::int64_t counting_function(const Generation& gen, const CurveSpec& curve, Vec2 z,
                               Vec2 offset) {
  std::int64_t count = 0;
  scan_hits(gen, curve, z, offset, [&](std::size_t, std::size_t) {
    ++count;
    return true;
  });
  return count;
}

Box minkowski_box(const Generation& gen, const CurveSpec& curve, Vec2 offset) {
  (void)gen;  // every generation spans [0,1]^2
  const Box cb = curve.bounding_box();
  return {offset.x - cb.x1, offset.x + 1.0 - cb.x0, offset.y - cb.y1, offset.y + 1.0 - cb.y0};
}

FavardEstimate mc_favard_curve(const Generation& gen, const CurveSpec& curve,
                               std::uint64_t samples, const RngSpec& rng) {
  if (samples < 1) throw_argument("samples must be >= 1");
  const Box box = minkowski_box(gen, curve);
  const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<std::uint64_t> hits(chunks, 0);
  parallel::for_range(static_cast<std::int64_t>(chunks), [&](std::int64_t c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
    const std::uint64_t end = std::min(samples, begin + kChunk);
    std::uint64_t local = 0;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const Vec2 u = rng::uniform_pair(rng, idx);
      const Vec2 z{box.x0 + u.x * box.width(), box.y0 + u.y * box.height()};
      if (any_hit(gen, curve, z)) ++local;
    }
    hits[c] = local;
  });

  std::uint64_t total = 0;
  for (std::uint64_t h : hits) total += h;
  const double p = static_cast<double>(total) / static_cast<double>(samples);
  FavardEstimate out;
  out.value = box.area() * p;
  out.error_indicator =
      box.area() * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  out.method = EstimateMethod::monte_carlo;
  out.params = "samples=" + std::to_string(samples);
  out.seed = rng.master_seed;
  return out;
}

MomentResult moment_estimate(const Generation& gen, const CurveSpec& curve, int order,
                             std::uint64_t samples, const RngSpec& rng) {
  if (order != 1 && order != 2) throw_argument("moment order must be 1 or 2");
  if (samples < 1) throw_argument("samples must be >= 1");
  const Box box = minkowski_box(gen, curve);
  const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
  // f_n is integer-valued, so the accumulators are exact and the result is
  // independent of the reduction schedule.
  std::vector<unsigned __int128> sum_f(chunks, 0);
  std::vector<unsigned __int128> sum_f2(chunks, 0);
  parallel::for_range(static_cast<std::int64_t>(chunks), [&](std::int64_t c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
    const std::uint64_t end = std::min(samples, begin + kChunk);
    unsigned __int128 local_f = 0;
    unsigned __int128 local_f2 = 0;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const Vec2 u = rng::uniform_pair(rng, idx);
      const Vec2 z{box.x0 + u.x * box.width(), box.y0 + u.y * box.height()};
      const std::uint64_t f = static_cast<std::uint64_t>(counting_function(gen, curve, z));
      const std::uint64_t fo = order == 1 ? f : f * f;
      local_f += fo;
      local_f2 += static_cast<unsigned __int128>(fo) * fo;
    }
    sum_f[c] = local_f;
    sum_f2[c] = local_f2;
  });

  unsigned __int128 total_f = 0;
  unsigned __int128 total_f2 = 0;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    total_f += sum_f[c];
    total_f2 += sum_f2[c];
  }
  const double mean = static_cast<double>(total_f) / static_cast<double>(samples);
  const double mean_sq = static_cast<double>(total_f2) / static_cast<double>(samples);
  const double variance = std::max(0.0, mean_sq - mean * mean);

  MomentResult out;
  out.value = box.area() * mean;
  out.std_error = box.area() * std::sqrt(variance / static_cast<double>(samples));
  out.order = order;
  out.samples = samples;
  return out;
}

std::vector<DropSample> mc_samples(const Generation& gen, const CurveSpec& curve,
                                   std::uint64_t samples, const RngSpec& rng) {
  if (samples < 1) throw_argument("samples must be >= 1");
  const Box box = minkowski_box(gen, curve);
  std::vector<DropSample> out(samples);
  parallel::for_range(static_cast<std::int64_t>(samples), [&](std::int64_t idx) {
    const Vec2 u = rng::uniform_pair(rng, static_cast<std::uint64_t>(idx));
    const Vec2 z{box.x0 + u.x * box.width(), box.y0 + u.y * box.height()};
    out[idx] = {z, counting_function(gen, curve, z)};
  });
  return out;
}

double pair_overlap(const DyadicSquare& qi, const DyadicSquare& qj, const CurveSpec& curve,
                    double pitch) {
  if (!(pitch > 0.0)) throw_argument("pitch must be positive");
  const Box cb = curve.bounding_box();
  const Box bi{qi.x0() - cb.x1, qi.x0() + qi.side() - cb.x0, qi.y0() - cb.y1,
               qi.y0() + qi.side() - cb.y0};
  const Box bj{qj.x0() - cb.x1, qj.x0() + qj.side() - cb.x0, qj.y0() - cb.y1,
               qj.y0() + qj.side() - cb.y0};
  const Box box = Box::intersect(bi, bj);
  if (box.empty()) return 0.0;

  const std::int64_t cols = std::max<std::int64_t>(1, std::llround(std::ceil(box.width() / pitch)));
  const std::int64_t rows = std::max<std::int64_t>(1, std::llround(std::ceil(box.height() / pitch)));
  std::vector<std::int64_t> cells(cols, 0);
  parallel::for_range(cols, [&](std::int64_t i) {
    const double alpha = box.x0 + (static_cast<double>(i) + 0.5) * pitch;
    std::vector<Interval> raw_i;
    std::vector<Interval> raw_j;
    detail::square_column_windows(curve, alpha, qi.x0(), qi.y0(), qi.side(), raw_i);
    detail::square_column_windows(curve, alpha, qj.x0(), qj.y0(), qj.side(), raw_j);
    const IntervalSet both = IntervalSet::intersection_of(IntervalSet::from_raw(std::move(raw_i)),
                                                          IntervalSet::from_raw(std::move(raw_j)));
    std::int64_t count = 0;
    for (const Interval& w : both) {
      std::int64_t jmin = static_cast<std::int64_t>(std::ceil((w.lo - box.y0) / pitch - 0.5));
      std::int64_t jmax = static_cast<std::int64_t>(std::floor((w.hi - box.y0) / pitch - 0.5));
      jmin = std::max<std::int64_t>(jmin, 0);
      jmax = std::min<std::int64_t>(jmax, rows - 1);
      if (jmax >= jmin) count += jmax - jmin + 1;
    }
    cells[i] = count;
  });

  std::int64_t total = 0;
  for (std::int64_t c : cells) total += c;
  return static_cast<double>(total) * pitch * pitch;
}

}  // namespace favard
