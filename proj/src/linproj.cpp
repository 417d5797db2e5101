#include "favard/linproj.hpp"

#include <cmath>
#include <numbers>

#include "favard/error.hpp"
#include "favard/parallel.hpp"

namespace favard {

namespace {

constexpr double kPi = std::numbers::pi;

IntervalSet project(const Generation& gen, double cx, double cy) {
  const double side = gen.side();
  const double dx = cx * side;
  const double dy = cy * side;
  const double span_lo = std::min(0.0, dx) + std::min(0.0, dy);
  const double span_hi = std::max(0.0, dx) + std::max(0.0, dy);

  std::vector<Interval> raw;
  raw.reserve(gen.axis().size() * gen.axis().size());
  for (std::int64_t ix : gen.axis()) {
    const double px = cx * std::ldexp(static_cast<double>(ix), -2 * gen.level());
    for (std::int64_t iy : gen.axis()) {
      const double base = px + cy * std::ldexp(static_cast<double>(iy), -2 * gen.level());
      raw.push_back({base + span_lo, base + span_hi});
    }
  }
  return IntervalSet::from_raw(std::move(raw));
}

double quarter_integral(const Generation& gen, int points) {
  const double h = (kPi / 4.0) / points;
  std::vector<double> values(points);
  parallel::for_range(points, [&](std::int64_t i) {
    const double theta = (static_cast<double>(i) + 0.5) * h;
    values[i] = shadow(gen, Angle(theta)).measure();
  });
  return 4.0 * h * parallel::pairwise_sum(values);
}

}  // namespace

Angle::Angle(double radians) {
  if (std::isnan(radians)) throw_argument("angle is NaN");
  theta_ = std::fmod(radians, kPi);
  if (theta_ < 0.0) theta_ += kPi;
  if (theta_ >= kPi) theta_ = 0.0;  // fmod rounding at the seam
}

IntervalSet shadow(const Generation& gen, Angle theta) {
  return project(gen, std::cos(theta.radians()), std::sin(theta.radians()));
}

IntervalSet intercept_shadow(const Generation& gen, double slope) {
  if (!std::isfinite(slope)) throw_argument("slope must be finite");
  return project(gen, -slope, 1.0);
}

FavardEstimate favard_length(const Generation& gen, const QuadratureSpec& quad) {
  if (quad.points < 2) throw_argument("quadrature needs at least 2 points");
  if (quad.refinement < 1 || (quad.points >> quad.refinement) < 1) {
    throw_argument("refinement levels must leave at least one node");
  }
  const double fine = quarter_integral(gen, quad.points);
  double indicator = 0.0;
  for (int level = 1; level <= quad.refinement; ++level) {
    indicator = std::max(indicator,
                         std::abs(fine - quarter_integral(gen, quad.points >> level)));
  }
  FavardEstimate out;
  out.value = fine;
  out.error_indicator = indicator;
  out.method = EstimateMethod::quadrature;
  out.params = "points=" + std::to_string(quad.points) + " domain=theta:[0,pi)";
  return out;
}

std::vector<std::pair<double, double>> favard_length_trace(const Generation& gen, int points) {
  if (points < 1) throw_argument("trace needs at least 1 point");
  const double h = kPi / points;
  std::vector<std::pair<double, double>> rows(points);
  parallel::for_range(points, [&](std::int64_t i) {
    const double theta = (static_cast<double>(i) + 0.5) * h;
    rows[i] = {theta, shadow(gen, Angle(theta)).measure()};
  });
  return rows;
}

const char* method_name(EstimateMethod method) {
  switch (method) {
    case EstimateMethod::quadrature:
      return "quadrature";
    case EstimateMethod::grid:
      return "grid";
    case EstimateMethod::monte_carlo:
      return "mc";
  }
  return "unknown";
}

}  // namespace favard
