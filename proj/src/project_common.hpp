#pragma once

#include <optional>
#include <vector>

#include "favard/cantor.hpp"
#include "favard/curve.hpp"
#include "favard/interval_set.hpp"

// Window arithmetic shared by the set projections, the grid estimator, and
// the hit tests. A piece dropped at z = (z1, z2) meets a square iff the
// translation in the piece's value direction lies in the window returned
// here, so using one implementation keeps all callers consistent.
namespace favard::detail {

// Clipped domain D = [g0 - along, g0 + side - along] ∩ [a, b], where
// `along` is the translation along the piece's graph direction.
std::optional<Interval> clip_domain(const GraphPiece& piece, double along, double g0,
                                    double side);

// Translation window in the piece's value direction: with [mn, mx] the
// range of phi over D, the window is [o0 - mx, o0 + side - mn].
std::optional<Interval> value_window(const GraphPiece& piece, double along, double g0,
                                     double o0, double side);

// Preimage-based windows, used when slicing across the piece's graph
// direction: with the value translation fixed at `value_shift`, each
// component [tl, th] of phi^{-1}([v0 - value_shift, v0 + side - value_shift])
// yields the window [g0 - th, g0 + side - tl] for the graph translation.
// At most two components exist (phi' is strictly monotone).
void cross_windows(const GraphPiece& piece, double value_shift, double v0, double g0,
                   double side, std::vector<Interval>& out);

// Windows in beta for one square against every piece of a curve at a fixed
// alpha column.
void square_column_windows(const CurveSpec& curve, double alpha, double x0, double y0,
                           double side, std::vector<Interval>& out);

// First/last indices of sorted axis numerators whose coordinate
// (num * 4^-n + shift) could meet [lo - side, hi]; conservative by a small
// slack, callers re-check exactly.
std::pair<std::size_t, std::size_t> axis_candidates(const std::vector<std::int64_t>& axis,
                                                    int n, double shift, double lo, double hi,
                                                    double side);

}  // namespace favard::detail
