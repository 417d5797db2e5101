#pragma once

#include <span>
#include <utility>
#include <vector>

#include "favard/cantor.hpp"
#include "favard/curve.hpp"
#include "favard/estimate.hpp"
#include "favard/geometry.hpp"
#include "favard/interval_set.hpp"

namespace favard {

// Set-level curve projection of a generation through one over-x piece: the
// union over squares of [y0 - max_D phi, y0 + side - min_D phi], D the
// square's clipped parameter window. Empty-window squares contribute
// nothing. `offset` translates the generation.
IntervalSet phi_alpha_set(const GraphPiece& piece, double alpha, const Generation& gen,
                          Vec2 offset = {});
IntervalSet phi_alpha_set(const GraphPiece& piece, double alpha,
                          std::span<const DyadicSquare> squares, Vec2 offset = {});

// Transposed analog for over-y pieces.
IntervalSet psi_beta_set(const GraphPiece& piece, double beta, const Generation& gen,
                         Vec2 offset = {});

// Midpoint quadrature of the merged projection measure over the support of
// the translation parameter. All pieces must share one axis; mixed curves
// are rejected (use the grid or Monte Carlo estimators).
FavardEstimate favard_curve_quadrature(const CurveSpec& curve, const Generation& gen,
                                       const QuadratureSpec& quad, Vec2 offset = {});
std::vector<std::pair<double, double>> favard_curve_quadrature_trace(
    const CurveSpec& curve, const Generation& gen, int points, Vec2 offset = {});

// Sum-set rasterization: counts grid cells whose center z satisfies
// (z + curve) meets the generation; value = count * pitch^2, error
// indicator = estimated boundary length * pitch. Handles mixed-axis curves.
FavardEstimate favard_curve_grid(const CurveSpec& curve, const Generation& gen, double pitch,
                                 Vec2 offset = {});

// Per-alpha comparison of a block projection |Phi_alpha(Q~_j)| against
// 2^-n * |proj_theta(K_{n/2})| with theta from the tangent angle map at the
// block's lower-left member center (curve extended by 2^-n so the angle is
// defined on the whole support).
struct LocalComparisonRow {
  double alpha;
  double lhs;
  double rhs;
  double ratio;
};

std::vector<LocalComparisonRow> local_block_comparison(const CurveSpec& curve, int n,
                                                       std::int64_t block_index,
                                                       int alpha_samples);

}  // namespace favard
