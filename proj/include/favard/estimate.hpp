#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace favard {

struct QuadratureSpec {
  QuadratureSpec() = default;
  explicit QuadratureSpec(int node_count) : points(node_count) {}

  int points = 4096;  // midpoint nodes at full resolution; must be >= 2

  // Override of the translation-parameter window (must cover the support
  // of the integrand); ignored by the direction integral, whose window is
  // intrinsic.
  std::optional<std::pair<double, double>> range;

  // Halving levels behind the error indicator: the indicator is the worst
  // difference against the grids with points/2, ..., points/2^refinement.
  int refinement = 1;
};

enum class EstimateMethod { quadrature, grid, monte_carlo };

const char* method_name(EstimateMethod method);

struct FavardEstimate {
  double value = 0.0;
  double error_indicator = 0.0;
  EstimateMethod method = EstimateMethod::quadrature;
  std::string params;  // discretization record, e.g. "points=4096"
  std::optional<std::uint64_t> seed;
};

}  // namespace favard
