#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "favard/cantor.hpp"
#include "favard/error.hpp"

using namespace favard;

namespace {

// Independent enumeration: left endpoints are every sum of a_j * 4^-j with
// digits in {0, 3}, built from the digit strings directly.
std::vector<std::int64_t> digit_string_numerators(int n) {
  std::vector<std::int64_t> nums;
  const int count = 1 << n;
  for (int mask = 0; mask < count; ++mask) {
    std::int64_t num = 0;
    for (int j = 0; j < n; ++j) {
      const int digit = (mask >> (n - 1 - j)) & 1 ? 3 : 0;
      num = num * 4 + digit;
    }
    nums.push_back(num);
  }
  std::sort(nums.begin(), nums.end());
  return nums;
}

}  // namespace

TEST_CASE("generation 0 is the unit interval") {
  const auto c0 = cantor_1d(0);
  REQUIRE(c0.size() == 1);
  CHECK(c0[0].lo() == 0.0);
  CHECK(c0[0].hi() == 1.0);
}

TEST_CASE("generation 1 removes the middle half") {
  const auto c1 = cantor_1d(1);
  REQUIRE(c1.size() == 2);
  CHECK(c1[0].lo() == 0.0);
  CHECK(c1[0].hi() == 0.25);
  CHECK(c1[1].lo() == 0.75);
  CHECK(c1[1].hi() == 1.0);
}

TEST_CASE("generation 3 matches the digit-string enumeration") {
  const auto c3 = cantor_1d(3);
  const auto expected = digit_string_numerators(3);
  REQUIRE(c3.size() == expected.size());
  for (std::size_t i = 0; i < c3.size(); ++i) {
    CHECK(c3[i].num == expected[i]);
    CHECK(cantor_digits_ok(3, c3[i].num));
  }
}

TEST_CASE("interval counts and exact total measure") {
  for (int n = 0; n <= 8; ++n) {
    const auto intervals = cantor_1d(n);
    CHECK(intervals.size() == (std::size_t{1} << n));
    double total = 0.0;
    for (const auto& iv : intervals) total += iv.width();
    CHECK(total == std::ldexp(1.0, -n));  // dyadic sums are exact
  }
}

TEST_CASE("generation bounds are enforced") {
  CHECK_THROWS_AS(cantor_1d(-1), Error);
  CHECK_THROWS_AS(cantor_1d(kMaxGeneration + 1), Error);
  CHECK_THROWS_AS(cantor_2d(-2), Error);
}

TEST_CASE("self-similarity: each interval splits into a scaled copy") {
  for (int n = 0; n <= 6; ++n) {
    const auto coarse = cantor_1d(n);
    const auto fine = cantor_1d(n + 1);
    std::set<std::int64_t> fine_nums;
    for (const auto& iv : fine) fine_nums.insert(iv.num);
    for (const auto& iv : coarse) {
      // children are the endpoints of a quarter-scale middle-half step
      CHECK(fine_nums.count(4 * iv.num) == 1);
      CHECK(fine_nums.count(4 * iv.num + 3) == 1);
    }
    CHECK(fine.size() == 2 * coarse.size());
  }
}

TEST_CASE("2-d generations are the product of the 1-d generation") {
  const auto squares_count = [](int n) { return cantor_2d(n).square_count(); };
  CHECK(squares_count(0) == 1);
  CHECK(squares_count(1) == 4);

  const Generation g4 = cantor_2d(4);
  CHECK(g4.square_count() == 256);
  const auto axis = digit_string_numerators(4);
  std::set<std::pair<std::int64_t, std::int64_t>> expected;
  for (auto x : axis)
    for (auto y : axis) expected.insert({x, y});
  std::set<std::pair<std::int64_t, std::int64_t>> got;
  for (std::uint64_t i = 0; i < g4.square_count(); ++i) {
    const DyadicSquare q = g4.square(i);
    got.insert({q.ix, q.iy});
    CHECK(q.side() == std::ldexp(1.0, -8));
  }
  CHECK(got == expected);  // also proves pairwise distinctness
}

TEST_CASE("squares enumerate lexicographically") {
  const Generation g2 = cantor_2d(2);
  for (std::uint64_t i = 1; i < g2.square_count(); ++i) {
    const DyadicSquare a = g2.square(i - 1);
    const DyadicSquare b = g2.square(i);
    CHECK((a.ix < b.ix || (a.ix == b.ix && a.iy < b.iy)));
  }
}

TEST_CASE("generation 1 squares sit in the corners") {
  const Generation g1 = cantor_2d(1);
  std::set<std::pair<std::int64_t, std::int64_t>> corners;
  for (std::uint64_t i = 0; i < 4; ++i) {
    const DyadicSquare q = g1.square(i);
    corners.insert({q.ix, q.iy});
  }
  CHECK(corners == std::set<std::pair<std::int64_t, std::int64_t>>{
                       {0, 0}, {0, 3}, {3, 0}, {3, 3}});
}

TEST_CASE("half-generation blocks at n=2") {
  const auto blocks = half_generation_blocks(2);
  REQUIRE(blocks.size() == 4);
  for (const auto& blk : blocks) {
    CHECK(blk.block.side() == 0.25);
    CHECK(blk.members.size() == 4);
    for (const auto& m : blk.members) {
      CHECK(m.side() == 1.0 / 16);
      CHECK(m.x0() >= blk.block.x0());
      CHECK(m.x0() + m.side() <= blk.block.x0() + blk.block.side());
      CHECK(m.y0() >= blk.block.y0());
      CHECK(m.y0() + m.side() <= blk.block.y0() + blk.block.side());
    }
  }
}

TEST_CASE("half-generation base case") {
  const auto blocks = half_generation_blocks(0);
  REQUIRE(blocks.size() == 1);
  CHECK(blocks[0].block.side() == 1.0);
  CHECK(blocks[0].members.size() == 1);
}

TEST_CASE("half-generation blocks partition the generation") {
  const auto blocks = half_generation_blocks(4);
  REQUIRE(blocks.size() == 16);
  std::set<std::pair<std::int64_t, std::int64_t>> members;
  for (const auto& blk : blocks) {
    CHECK(blk.members.size() == 16);
    for (const auto& m : blk.members) {
      CHECK(members.insert({m.ix, m.iy}).second);  // disjointness
    }
  }
  const Generation g4 = cantor_2d(4);
  std::set<std::pair<std::int64_t, std::int64_t>> expected;
  for (std::uint64_t i = 0; i < g4.square_count(); ++i) {
    const DyadicSquare q = g4.square(i);
    expected.insert({q.ix, q.iy});
  }
  CHECK(members == expected);
}

TEST_CASE("odd generations cannot be block-decomposed") {
  CHECK_THROWS_AS(half_generation_blocks(3), Error);
}

TEST_CASE("exact decimal rendering") {
  CHECK(dyadic_decimal(0, 0) == "0");
  CHECK(dyadic_decimal(1, 0) == "1");
  CHECK(dyadic_decimal(3, 1) == "0.75");
  CHECK(dyadic_decimal(1, 2) == "0.0625");
  CHECK(dyadic_decimal(15, 2) == "0.9375");
  CHECK(dyadic_decimal(1, 12) == "0.000000059604644775390625");
  CHECK(dyadic_decimal(-3, 1) == "-0.75");
  CHECK(dyadic_decimal(16, 2) == "1");
}
