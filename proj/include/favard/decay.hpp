#pragma once

#include <cstddef>
#include <span>
#include <utility>

namespace favard {

// Least-squares power-law fit in log-log coordinates over (n, value)
// points; only points with n >= 1 and value > 0 enter the fit.
struct DecayFit {
  double exponent = 0.0;   // slope of log(value) against log(n)
  double intercept = 0.0;  // log(value) at log(n) = 0
  double r_squared = 0.0;
  double min_n_times_value = 0.0;  // empirical constant for a 1/n lower bound
  std::size_t points_used = 0;
};

DecayFit fit_decay(std::span<const std::pair<double, double>> points);

}  // namespace favard
