#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "favard/buffon.hpp"
#include "favard/cantor.hpp"
#include "favard/curve.hpp"
#include "favard/curveproj.hpp"
#include "favard/error.hpp"
#include "favard/pairs.hpp"
#include "favard/parallel.hpp"
#include "favard/rng.hpp"

using namespace favard;

namespace {

// Hit oracle: coarse dense sampling of the dropped curve plus local
// bisection refinement of the box distance around the best candidates.
double box_distance(Vec2 p, double x0, double y0, double side) {
  const double dx = std::max({x0 - p.x, 0.0, p.x - (x0 + side)});
  const double dy = std::max({y0 - p.y, 0.0, p.y - (y0 + side)});
  return std::hypot(dx, dy);
}

double min_distance_to_square(const GraphPiece& piece, Vec2 z, double x0, double y0,
                              double side) {
  const int kCoarse = 10000;
  auto dist_at = [&](double t) {
    const Vec2 p = piece.axis() == Axis::over_x ? Vec2{z.x + t, z.y + piece.value(t)}
                                                : Vec2{z.x + piece.value(t), z.y + t};
    return box_distance(p, x0, y0, side);
  };
  double best = std::numeric_limits<double>::infinity();
  double best_t = piece.a();
  for (int s = 0; s <= kCoarse; ++s) {
    const double t = piece.a() + (piece.b() - piece.a()) * s / kCoarse;
    const double d = dist_at(t);
    if (d < best) {
      best = d;
      best_t = t;
    }
  }
  // golden-section refinement around the best coarse sample
  const double step = (piece.b() - piece.a()) / kCoarse;
  double lo = std::max(piece.a(), best_t - step);
  double hi = std::min(piece.b(), best_t + step);
  for (int it = 0; it < 200; ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (dist_at(m1) <= dist_at(m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  return std::min(best, dist_at(0.5 * (lo + hi)));
}

double min_distance_to_square(const CurveSpec& curve, Vec2 z, double x0, double y0,
                              double side) {
  double best = std::numeric_limits<double>::infinity();
  for (const GraphPiece& piece : curve.pieces()) {
    best = std::min(best, min_distance_to_square(piece, z, x0, y0, side));
  }
  return best;
}

std::vector<DyadicSquare> all_squares(const Generation& gen) {
  std::vector<DyadicSquare> squares;
  for (std::uint64_t i = 0; i < gen.square_count(); ++i) squares.push_back(gen.square(i));
  return squares;
}

}  // namespace

TEST_CASE("point curve hits exactly its containing square") {
  const CurveSpec point = make_segment(0.0, 0.0);
  const DyadicSquare q{1, 3, 0};  // [3/4,1] x [0,1/4]
  CHECK(square_hits_curve(q, point, {0.8, 0.1}));
  CHECK_FALSE(square_hits_curve(q, point, {0.5, 0.1}));
}

TEST_CASE("arc one unit below a square misses it") {
  const CurveSpec arc = make_half_circle(2.0, -1);
  const DyadicSquare q{0, 0, 0};
  // apex of z + arc is at z2 - 2; put it 1 below the square
  CHECK_FALSE(square_hits_curve(q, arc, {0.5, 1.0}));
  CHECK(square_hits_curve(q, arc, {0.5, 2.0}));
}

TEST_CASE("hit test agrees with a refined dense-sampling oracle") {
  const Generation g2 = cantor_2d(2);
  const auto squares = all_squares(g2);
  for (const CurveSpec& curve : {make_half_circle(2.0, -1), make_segment(0.5, 2.0)}) {
    const Box box = minkowski_box(g2, curve);
    RngSpec spec{99, 17};
    int disagreements = 0;
    for (int i = 0; i < 10000; ++i) {
      const Vec2 u = rng::uniform_pair(spec, i);
      const Vec2 z{box.x0 + u.x * box.width(), box.y0 + u.y * box.height()};
      const DyadicSquare& q = squares[static_cast<std::size_t>(i) % squares.size()];
      const bool fast = square_hits_curve(q, curve, z);
      const double dist = min_distance_to_square(curve, z, q.x0(), q.y0(), q.side());
      const bool oracle = dist == 0.0;
      if (fast != oracle && dist > 1e-9) ++disagreements;
    }
    CHECK(disagreements == 0);
  }
}

TEST_CASE("counting function vanishes far away and counts the unit square") {
  const CurveSpec arc = make_half_circle(2.0, -1);
  CHECK(counting_function(cantor_2d(3), arc, {50.0, 50.0}) == 0);
  CHECK(counting_function(cantor_2d(0), arc, {0.5, 2.0}) == 1);
}

TEST_CASE("pruned counting equals the unpruned full scan") {
  const Generation g2 = cantor_2d(2);
  const auto squares = all_squares(g2);
  for (const CurveSpec& curve :
       {make_half_circle(2.0, -1), make_circle(1.0), make_parabola(1.0, 0.0, 0.0, -1.0, 1.0)}) {
    const Box box = minkowski_box(g2, curve);
    RngSpec spec{123, 6};
    for (int i = 0; i < 100; ++i) {
      const Vec2 u = rng::uniform_pair(spec, i);
      const Vec2 z{box.x0 + u.x * box.width(), box.y0 + u.y * box.height()};
      std::int64_t full = 0;
      for (const DyadicSquare& q : squares) {
        if (square_hits_curve(q, curve, z)) ++full;
      }
      CHECK(counting_function(g2, curve, z) == full);
    }
  }
}

TEST_CASE("point-curve monte carlo recovers the unit square exactly") {
  const CurveSpec point = make_segment(0.0, 0.0);
  const FavardEstimate est = mc_favard_curve(cantor_2d(0), point, 1000000, RngSpec{5, 0});
  CHECK(est.value == 1.0);  // every drop in B = [0,1]^2 hits
  CHECK(est.error_indicator == 0.0);
}

TEST_CASE("monte carlo agrees with the quadrature") {
  const CurveSpec arc = make_half_circle(2.0, -1);
  const Generation g3 = cantor_2d(3);
  const FavardEstimate mc = mc_favard_curve(g3, arc, 1000000, RngSpec{42, 0});
  const FavardEstimate quad = favard_curve_quadrature(arc, g3, QuadratureSpec{4096});
  CHECK(std::abs(mc.value - quad.value) <=
        3.0 * (mc.error_indicator + quad.error_indicator));
}

TEST_CASE("monte carlo is bit-identical across thread counts") {
  const CurveSpec arc = make_half_circle(2.0, -1);
  const Generation g2 = cantor_2d(2);
  std::vector<double> values;
  for (int threads : {1, 2, 5}) {
    parallel::set_thread_count(threads);
    values.push_back(mc_favard_curve(g2, arc, 300000, RngSpec{7, 0}).value);
  }
  parallel::set_thread_count(0);
  CHECK(values[0] == values[1]);
  CHECK(values[0] == values[2]);
}

TEST_CASE("different seeds give different drop sequences") {
  const CurveSpec arc = make_half_circle(2.0, -1);
  const Generation g2 = cantor_2d(2);
  const double a = mc_favard_curve(g2, arc, 100000, RngSpec{1, 0}).value;
  const double b = mc_favard_curve(g2, arc, 100000, RngSpec{2, 0}).value;
  CHECK(a != b);
}

TEST_CASE("first moment equals the hit probability when f is an indicator") {
  const CurveSpec arc = make_half_circle(2.0, -1);
  const Generation g0 = cantor_2d(0);
  const RngSpec rng{11, 0};
  const FavardEstimate area = mc_favard_curve(g0, arc, 200000, rng);
  const MomentResult m1 = moment_estimate(g0, arc, 1, 200000, rng);
  CHECK(m1.value == area.value);  // same drop stream, f in {0,1}
}

TEST_CASE("moment orders are validated") {
  const CurveSpec arc = make_half_circle(2.0, -1);
  CHECK_THROWS_AS(moment_estimate(cantor_2d(1), arc, 3, 100, RngSpec{}), Error);
  CHECK_THROWS_AS(moment_estimate(cantor_2d(1), arc, 1, 0, RngSpec{}), Error);
}

TEST_CASE("raw samples expose the counting function stream") {
  const CurveSpec arc = make_half_circle(2.0, -1);
  const Generation g1 = cantor_2d(1);
  const RngSpec rng{31, 0};
  const auto rows = mc_samples(g1, arc, 500, rng);
  REQUIRE(rows.size() == 500);
  const Box box = minkowski_box(g1, arc);
  for (const DropSample& s : rows) {
    CHECK(s.z.x >= box.x0);
    CHECK(s.z.x <= box.x1);
    CHECK(s.hit_count == counting_function(g1, arc, s.z));
  }
}

TEST_CASE("self-overlap compares to the square scale") {
  const CurveSpec arc = make_half_circle(2.0, -1);
  const int n = 3;
  const Generation gen = cantor_2d(n);
  const DyadicSquare q = gen.square(5);
  const double p_ii = pair_overlap(q, q, arc, std::ldexp(1.0, -2 * n) / 8.0);
  const double scale = std::ldexp(1.0, -2 * n);  // 4^-n
  CHECK(p_ii > scale);
  CHECK(p_ii < 10.0 * scale);
}

TEST_CASE("self-overlap converges under pitch refinement") {
  const CurveSpec arc = make_half_circle(2.0, -1);
  const DyadicSquare q{2, 12, 3};
  const double coarse = pair_overlap(q, q, arc, 1.0 / 256);
  const double fine = pair_overlap(q, q, arc, 1.0 / 1024);
  CHECK(std::abs(coarse - fine) <= 0.05 * fine);
}

TEST_CASE("steep pairs cannot overlap") {
  const CurveSpec arc = make_half_circle(2.0, -1);
  const int n = 3;
  const Generation gen = cantor_2d(n);
  const auto squares = all_squares(gen);
  int found = 0;
  for (const DyadicSquare& qi : squares) {
    for (const DyadicSquare& qj : squares) {
      const PairClass c = classify_2d(qi, qj);
      if (c.k > c.ell) {
        CHECK(pair_overlap(qi, qj, arc, std::ldexp(1.0, -2 * n) / 4.0) == 0.0);
        if (++found >= 25) return;
      }
    }
  }
}

TEST_CASE("decoupled first moment: congruent squares share one overlap") {
  const CurveSpec arc = make_half_circle(2.0, -1);
  const int n = 2;
  const Generation gen = cantor_2d(n);
  const MomentResult m1 = moment_estimate(gen, arc, 1, 400000, RngSpec{17, 0});
  const DyadicSquare q = gen.square(7);
  const double p_qq = pair_overlap(q, q, arc, std::ldexp(1.0, -2 * n) / 16.0);
  const double expected = std::ldexp(1.0, 2 * n) * p_qq;  // 4^n * |q - C|
  CHECK(std::abs(m1.value - expected) <= 3.0 * m1.std_error + 0.02 * expected);
}

TEST_CASE("sum of pair overlaps matches the second moment at n=2") {
  const CurveSpec arc = make_half_circle(2.0, -1);
  const int n = 2;
  const Generation gen = cantor_2d(n);
  const auto squares = all_squares(gen);
  double sum = 0.0;
  for (const DyadicSquare& qi : squares) {
    for (const DyadicSquare& qj : squares) {
      sum += pair_overlap(qi, qj, arc, std::ldexp(1.0, -2 * n) / 16.0);
    }
  }
  const MomentResult m2 = moment_estimate(gen, arc, 2, 400000, RngSpec{23, 0});
  CHECK(std::abs(sum - m2.value) <= 3.0 * m2.std_error + 0.02 * sum);
}

TEST_CASE("counter-based draws are pure functions of seed, stream, index") {
  const RngSpec a{99, 0};
  const RngSpec b{99, 1};
  const Vec2 first = rng::uniform_pair(a, 1234);
  CHECK(rng::uniform_pair(a, 1234).x == first.x);
  CHECK(rng::uniform_pair(a, 1234).y == first.y);
  CHECK(rng::uniform_pair(b, 1234).x != first.x);  // stream split
  CHECK(rng::uniform_pair(a, 1235).x != first.x);  // counter split
  CHECK(first.x >= 0.0);
  CHECK(first.x < 1.0);
}
