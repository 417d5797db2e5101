#pragma once

#include <cstdint>
#include <vector>

#include "favard/cantor.hpp"
#include "favard/curve.hpp"
#include "favard/estimate.hpp"
#include "favard/geometry.hpp"
#include "favard/rng.hpp"

namespace favard {

// True iff (z + curve) meets the (offset-translated) square; closed-set
// semantics throughout, tangency counts as a hit.
bool square_hits_curve(const DyadicSquare& square, const CurveSpec& curve, Vec2 z,
                       Vec2 offset = {});

// f_n(z): number of generation squares met by the curve dropped at z.
// Candidate squares are pruned through the translated curve's bounding box
// and the generation's product structure.
std::int64_t counting_function(const Generation& gen, const CurveSpec& curve, Vec2 z,
                               Vec2 offset = {});

// Bounding box of (generation - curve): the support of all drop integrals.
Box minkowski_box(const Generation& gen, const CurveSpec& curve, Vec2 offset = {});

// |B| * hit fraction over uniform drops; error indicator is one standard
// error |B| * sqrt(p(1-p)/samples). Deterministic for a fixed RngSpec,
// independent of the thread count.
FavardEstimate mc_favard_curve(const Generation& gen, const CurveSpec& curve,
                               std::uint64_t samples, const RngSpec& rng);

struct MomentResult {
  double value = 0.0;
  double std_error = 0.0;
  int order = 1;
  std::uint64_t samples = 0;
};

// |B| * mean of f_n(z)^order over uniform drops, with one standard error.
MomentResult moment_estimate(const Generation& gen, const CurveSpec& curve, int order,
                             std::uint64_t samples, const RngSpec& rng);

struct DropSample {
  Vec2 z;
  std::int64_t hit_count = 0;
};

// The raw drop sequence behind the estimators above (same sample stream).
std::vector<DropSample> mc_samples(const Generation& gen, const CurveSpec& curve,
                                   std::uint64_t samples, const RngSpec& rng);

// p_{i,j} = |(Q_i - curve) ∩ (Q_j - curve)| by cell-center rasterization at
// the given pitch: a cell counts iff both square hit tests pass there.
double pair_overlap(const DyadicSquare& qi, const DyadicSquare& qj, const CurveSpec& curve,
                    double pitch);

}  // namespace favard
