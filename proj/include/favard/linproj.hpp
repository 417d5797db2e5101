#pragma once

#include <utility>
#include <vector>

#include "favard/cantor.hpp"
#include "favard/estimate.hpp"
#include "favard/interval_set.hpp"

namespace favard {

// Unoriented projection direction; wraps modulo pi into [0, pi).
class Angle {
 public:
  explicit Angle(double radians);
  double radians() const { return theta_; }

 private:
  double theta_;
};

// Orthogonal shadow {x cos t + y sin t : (x, y) in K_n}.
IntervalSet shadow(const Generation& gen, Angle theta);

// Intercept shadow {y - slope * x : (x, y) in K_n}: the y-intercepts of
// slope-`slope` lines meeting the generation.
IntervalSet intercept_shadow(const Generation& gen, double slope);

// Integral over directions of the shadow measure. Uses the dihedral
// symmetry of the generation to integrate over [0, pi/4] and multiply by
// four; the error indicator is the difference against the half-resolution
// grid.
FavardEstimate favard_length(const Generation& gen, const QuadratureSpec& quad);

// (theta, shadow measure) at `points` midpoint nodes spanning [0, pi).
std::vector<std::pair<double, double>> favard_length_trace(const Generation& gen, int points);

}  // namespace favard
