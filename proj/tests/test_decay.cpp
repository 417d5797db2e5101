#include <cmath>
#include <vector>

#include "doctest.h"
#include "favard/decay.hpp"
#include "favard/error.hpp"

using namespace favard;

TEST_CASE("exact reciprocal law") {
  std::vector<std::pair<double, double>> pts;
  for (int n = 1; n <= 8; ++n) pts.emplace_back(n, 1.0 / n);
  const DecayFit fit = fit_decay(pts);
  CHECK(fit.exponent == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.min_n_times_value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("exact scaled power law recovers slope and intercept") {
  std::vector<std::pair<double, double>> pts;
  for (int n = 2; n <= 10; ++n) pts.emplace_back(n, 5.0 * std::pow(n, -1.0 / 6.0));
  const DecayFit fit = fit_decay(pts);
  CHECK(std::abs(fit.exponent - (-1.0 / 6.0)) <= 1e-9);
  CHECK(fit.intercept == doctest::Approx(std::log(5.0)).epsilon(1e-9));
  CHECK(fit.r_squared >= 1.0 - 1e-12);
}

TEST_CASE("nonpositive values are dropped before fitting") {
  std::vector<std::pair<double, double>> pts{{1, 1.0}, {2, 0.5}, {3, 0.0},
                                             {4, 0.25}, {5, -1.0}};
  const DecayFit fit = fit_decay(pts);
  CHECK(fit.points_used == 3);
}

TEST_CASE("insufficient data is an error") {
  std::vector<std::pair<double, double>> pts{{1, 1.0}, {2, 0.5}};
  CHECK_THROWS_AS(fit_decay(pts), Error);
  std::vector<std::pair<double, double>> zeros{{1, 0.0}, {2, 0.0}, {3, 0.0}, {4, 0.0}};
  CHECK_THROWS_AS(fit_decay(zeros), Error);
}

TEST_CASE("noisy data keeps r-squared meaningful") {
  std::vector<std::pair<double, double>> pts;
  for (int n = 1; n <= 12; ++n) {
    const double wobble = (n % 2 == 0) ? 1.15 : 0.87;
    pts.emplace_back(n, wobble / n);
  }
  const DecayFit fit = fit_decay(pts);
  CHECK(fit.exponent < -0.5);
  CHECK(fit.exponent > -1.5);
  CHECK(fit.r_squared > 0.8);
  CHECK(fit.r_squared < 1.0);
}
