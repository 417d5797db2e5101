#include "favard/decay.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "favard/error.hpp"

namespace favard {

DecayFit fit_decay(std::span<const std::pair<double, double>> points) {
  std::vector<std::pair<double, double>> logs;
  double min_nv = std::numeric_limits<double>::infinity();
  for (const auto& [n, value] : points) {
    if (!(n >= 1.0) || !(value > 0.0)) continue;
    logs.emplace_back(std::log(n), std::log(value));
    min_nv = std::min(min_nv, n * value);
  }
  if (logs.size() < 3) {
    throw_precondition("decay fit needs at least 3 points with n >= 1 and value > 0");
  }

  double sx = 0.0, sy = 0.0;
  for (const auto& [x, y] : logs) {
    sx += x;
    sy += y;
  }
  const double mean_x = sx / logs.size();
  const double mean_y = sy / logs.size();
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [x, y] : logs) {
    sxx += (x - mean_x) * (x - mean_x);
    sxy += (x - mean_x) * (y - mean_y);
    syy += (y - mean_y) * (y - mean_y);
  }
  if (sxx <= 0.0) throw_precondition("decay fit needs at least two distinct n values");

  DecayFit fit;
  fit.exponent = sxy / sxx;
  fit.intercept = mean_y - fit.exponent * mean_x;
  double ss_res = 0.0;
  for (const auto& [x, y] : logs) {
    const double r = y - (fit.intercept + fit.exponent * x);
    ss_res += r * r;
  }
  fit.r_squared = syy > 0.0 ? std::max(0.0, 1.0 - ss_res / syy) : 1.0;
  fit.min_n_times_value = min_nv;
  fit.points_used = logs.size();
  return fit;
}

}  // namespace favard
