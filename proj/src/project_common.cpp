#include "project_common.hpp"

#include <algorithm>
#include <cmath>

namespace favard::detail {

namespace {

// t in the monotone branch [lo, hi] with phi(t) = c; c must lie between the
// endpoint values.
double solve_on_branch(const GraphPiece& piece, double lo, double hi, double c) {
  double vlo = piece.value(lo);
  double vhi = piece.value(hi);
  if (vlo == c) return lo;
  if (vhi == c) return hi;
  const bool rising = vlo < vhi;
  double a = lo;
  double b = hi;
  for (int i = 0; i < 110; ++i) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const double v = piece.value(mid);
    if ((v < c) == rising) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

// Preimage of [c1, c2] under phi restricted to the monotone branch [lo, hi].
// Endpoints inside the target band map to branch ends, which also covers
// constant (degenerate) profiles whose whole branch shares one value.
std::optional<Interval> branch_preimage(const GraphPiece& piece, double lo, double hi,
                                        double c1, double c2) {
  const double vlo = piece.value(lo);
  const double vhi = piece.value(hi);
  if (std::max(vlo, vhi) < c1 || std::min(vlo, vhi) > c2) return std::nullopt;
  const bool rising = vlo <= vhi;
  double ta = 0.0;
  double tb = 0.0;
  if (rising) {
    ta = vlo >= c1 ? lo : solve_on_branch(piece, lo, hi, c1);
    tb = vhi <= c2 ? hi : solve_on_branch(piece, lo, hi, c2);
  } else {
    ta = vlo <= c2 ? lo : solve_on_branch(piece, lo, hi, c2);
    tb = vhi >= c1 ? hi : solve_on_branch(piece, lo, hi, c1);
  }
  return Interval{std::min(ta, tb), std::max(ta, tb)};
}

}  // namespace

std::optional<Interval> clip_domain(const GraphPiece& piece, double along, double g0,
                                    double side) {
  const double lo = std::max(g0 - along, piece.a());
  const double hi = std::min(g0 + side - along, piece.b());
  if (lo > hi) return std::nullopt;
  return Interval{lo, hi};
}

std::optional<Interval> value_window(const GraphPiece& piece, double along, double g0,
                                     double o0, double side) {
  const auto d = clip_domain(piece, along, g0, side);
  if (!d) return std::nullopt;
  const Interval r = piece.range(d->lo, d->hi);
  return Interval{o0 - r.hi, o0 + side - r.lo};
}

void cross_windows(const GraphPiece& piece, double value_shift, double v0, double g0,
                   double side, std::vector<Interval>& out) {
  const double c1 = v0 - value_shift;
  const double c2 = v0 + side - value_shift;
  const auto st = piece.stationary();
  const bool split = st && piece.a() < *st && *st < piece.b();

  auto emit = [&](const std::optional<Interval>& t) {
    if (t) out.push_back({g0 - t->hi, g0 + side - t->lo});
  };
  if (split) {
    emit(branch_preimage(piece, piece.a(), *st, c1, c2));
    emit(branch_preimage(piece, *st, piece.b(), c1, c2));
  } else {
    emit(branch_preimage(piece, piece.a(), piece.b(), c1, c2));
  }
}

void square_column_windows(const CurveSpec& curve, double alpha, double x0, double y0,
                           double side, std::vector<Interval>& out) {
  for (const GraphPiece& piece : curve.pieces()) {
    if (piece.axis() == Axis::over_x) {
      if (auto w = value_window(piece, alpha, x0, y0, side)) out.push_back(*w);
    } else {
      cross_windows(piece, alpha, x0, y0, side, out);
    }
  }
}

std::pair<std::size_t, std::size_t> axis_candidates(const std::vector<std::int64_t>& axis,
                                                    int n, double shift, double lo, double hi,
                                                    double side) {
  const double slack = 1e-12 * (1.0 + std::abs(lo) + std::abs(hi)) + 1e-300;
  const double lo_bound = lo - side - slack;
  const double hi_bound = hi + slack;
  auto coord = [n, shift](std::int64_t num) {
    return std::ldexp(static_cast<double>(num), -2 * n) + shift;
  };
  const auto first = std::partition_point(axis.begin(), axis.end(), [&](std::int64_t num) {
    return coord(num) < lo_bound;
  });
  const auto last = std::partition_point(first, axis.end(), [&](std::int64_t num) {
    return coord(num) <= hi_bound;
  });
  return {static_cast<std::size_t>(first - axis.begin()),
          static_cast<std::size_t>(last - axis.begin())};
}

}  // namespace favard::detail
