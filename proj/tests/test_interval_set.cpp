#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "favard/error.hpp"
#include "favard/interval_set.hpp"
#include "favard/rng.hpp"

using namespace favard;

namespace {

// Small deterministic generator for property checks.
struct Rand {
  std::uint64_t i = 0;
  RngSpec spec{12345, 99};
  double next() {
    return rng::uniform_pair(spec, i++).x;
  }
};

std::vector<Interval> random_intervals(Rand& r, int count, double span) {
  std::vector<Interval> raw;
  for (int k = 0; k < count; ++k) {
    const double lo = r.next() * span;
    const double len = r.next() * span * 0.1;
    raw.push_back({lo, lo + len});
  }
  return raw;
}

// Membership counting on a fine grid, independent of the sweep merge.
double grid_measure(const IntervalSet& s, double lo, double hi, double pitch) {
  long hits = 0;
  const long cells = static_cast<long>((hi - lo) / pitch) + 1;
  for (long i = 0; i < cells; ++i) {
    if (s.contains(lo + (i + 0.5) * pitch)) ++hits;
  }
  return static_cast<double>(hits) * pitch;
}

}  // namespace

TEST_CASE("overlapping intervals merge") {
  const auto s = IntervalSet::from_raw({{0, 1}, {0.5, 2}});
  REQUIRE(s.size() == 1);
  CHECK(s[0].lo == 0.0);
  CHECK(s[0].hi == 2.0);
  CHECK(s.measure() == 2.0);
}

TEST_CASE("touching closed intervals merge") {
  const auto s = IntervalSet::from_raw({{0, 1}, {1, 2}});
  REQUIRE(s.size() == 1);
  CHECK(s.measure() == 2.0);
}

TEST_CASE("bad input is rejected") {
  CHECK_THROWS_AS(IntervalSet::from_raw({{1.0, 0.0}}), Error);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(IntervalSet::from_raw({{nan, 1.0}}), Error);
}

TEST_CASE("empty set has measure zero") {
  CHECK(IntervalSet{}.measure() == 0.0);
  CHECK(IntervalSet::from_raw({}).measure() == 0.0);
}

TEST_CASE("two-component measure") {
  const auto s = IntervalSet::from_raw({{0, 0.25}, {0.75, 1}});
  CHECK(s.size() == 2);
  CHECK(s.measure() == 0.5);
}

TEST_CASE("canonicalization is idempotent and matches a grid oracle") {
  Rand r;
  std::vector<Interval> raw = random_intervals(r, 1000, 10.0);
  const auto s = IntervalSet::from_raw(raw);

  std::vector<Interval> canon(s.begin(), s.end());
  const auto again = IntervalSet::from_raw(canon);
  REQUIRE(again.size() == s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(again[i].lo == s[i].lo);
    CHECK(again[i].hi == s[i].hi);
  }

  const double pitch = 1e-5;
  const double approx = grid_measure(s, -0.5, 11.5, pitch);
  CHECK(std::abs(approx - s.measure()) <= pitch * (2.0 * s.size() + 2.0));
}

TEST_CASE("monotonicity and subadditivity") {
  Rand r;
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = IntervalSet::from_raw(random_intervals(r, 20, 4.0));
    const auto b = IntervalSet::from_raw(random_intervals(r, 20, 4.0));
    const auto u = IntervalSet::union_of(a, b);
    CHECK(a.measure() <= u.measure() + 1e-12);
    CHECK(u.measure() <= a.measure() + b.measure() + 1e-12);

    const auto inter = IntervalSet::intersection_of(a, b);
    if (inter.measure() == 0.0) {
      // disjoint up to endpoints: subadditivity is equality
      CHECK(u.measure() == doctest::Approx(a.measure() + b.measure()).epsilon(1e-12));
    }
  }
}

TEST_CASE("intersection agrees with membership") {
  Rand r;
  const auto a = IntervalSet::from_raw(random_intervals(r, 30, 5.0));
  const auto b = IntervalSet::from_raw(random_intervals(r, 30, 5.0));
  const auto inter = IntervalSet::intersection_of(a, b);
  for (int i = 0; i < 2000; ++i) {
    const double x = r.next() * 6.0 - 0.5;
    CHECK(inter.contains(x) == (a.contains(x) && b.contains(x)));
  }
}

TEST_CASE("packing count on simple sets") {
  CHECK(vitali_delta_cover(IntervalSet::from_raw({{0, 1}}), 1.0) == 1);
  CHECK(vitali_delta_cover(IntervalSet::from_raw({{0, 0.3}, {0.5, 0.8}}), 0.1) == 6);
}

TEST_CASE("packing requires components no shorter than delta") {
  const auto s = IntervalSet::from_raw({{0, 0.05}, {0.5, 1.0}});
  CHECK_THROWS_AS(vitali_delta_cover(s, 0.1), Error);
  CHECK_THROWS_AS(vitali_delta_cover(s, 0.0), Error);
}

TEST_CASE("packing brackets the measure") {
  Rand r;
  for (int trial = 0; trial < 50; ++trial) {
    const double delta = 0.01 + 0.05 * r.next();
    std::vector<Interval> raw;
    for (int k = 0; k < 12; ++k) {
      const double lo = 3.0 * r.next() + 4.0 * k;
      const double len = delta + 2.0 * r.next();
      raw.push_back({lo, lo + len});
    }
    const auto s = IntervalSet::from_raw(raw);
    const int n = vitali_delta_cover(s, delta);
    const double m = s.measure();
    CHECK(n * delta <= m + 1e-9);
    CHECK(m <= 2.0 * n * delta + delta);
    CHECK(n * delta >= m / 3.0 - 1e-9);
  }
}
