#include <cstdint>
#include <vector>

#include "doctest.h"
#include "favard/cantor.hpp"
#include "favard/error.hpp"
#include "favard/pairs.hpp"

using namespace favard;

TEST_CASE("identical intervals form the n class") {
  for (int n : {0, 1, 4}) {
    const auto intervals = cantor_1d(n);
    CHECK(classify_1d(intervals.front(), intervals.front()) == n);
  }
}

TEST_CASE("the two generation-1 intervals form a 0-pair") {
  const auto c1 = cantor_1d(1);
  REQUIRE(c1.size() == 2);
  // center distance 3/4 sits exactly on the band [3/4, 3/4]
  CHECK(classify_1d(c1[0], c1[1]) == 0);
  CHECK(classify_1d(c1[1], c1[0]) == 0);
}

TEST_CASE("every generation-3 pair lands in exactly one band") {
  const auto c3 = cantor_1d(3);
  for (const auto& a : c3) {
    for (const auto& b : c3) {
      const int k = classify_1d(a, b);
      CHECK(k >= 0);
      CHECK(k <= 3);
    }
  }
}

TEST_CASE("distances never fall between the bands") {
  for (int n = 0; n <= 6; ++n) {
    const auto intervals = cantor_1d(n);
    for (const auto& a : intervals) {
      for (const auto& b : intervals) {
        CHECK_NOTHROW(classify_1d(a, b));
      }
    }
  }
}

TEST_CASE("classification requires one generation") {
  CHECK_THROWS_AS(classify_1d({1, 0}, {2, 0}), Error);
}

TEST_CASE("square classification is componentwise and symmetric") {
  const DyadicSquare a{1, 0, 0};
  const DyadicSquare b{1, 3, 0};
  const PairClass c = classify_2d(a, b);
  CHECK(c.k == 0);
  CHECK(c.ell == 1);
  const PairClass r = classify_2d(b, a);
  CHECK(r.k == c.k);
  CHECK(r.ell == c.ell);
  const PairClass self = classify_2d(a, a);
  CHECK(self.k == 1);
  CHECK(self.ell == 1);
}

TEST_CASE("1-d counts at small generations") {
  const auto n1 = count_pairs_1d(1, false);
  CHECK(n1 == std::vector<std::int64_t>{2, 2});
  const auto n2 = count_pairs_1d(2, false);
  CHECK(n2 == std::vector<std::int64_t>{8, 4, 4});
}

TEST_CASE("1-d formula equals exhaustive enumeration") {
  for (int n = 0; n <= 8; ++n) {
    const auto formula = count_pairs_1d(n, false);
    const auto brute = count_pairs_1d(n, true);
    CHECK(formula == brute);
    std::int64_t total = 0;
    for (std::int64_t c : brute) total += c;
    CHECK(total == (std::int64_t{1} << (2 * n)));  // 4^n ordered pairs
  }
}

TEST_CASE("2-d formula equals exhaustive enumeration") {
  for (int n = 0; n <= 3; ++n) {
    const auto formula = count_pairs_2d(n, false);
    const auto brute = count_pairs_2d(n, true);
    CHECK(formula == brute);
    std::int64_t total = 0;
    for (std::int64_t c : brute) total += c;
    std::int64_t expected = 1;
    for (int i = 0; i < n; ++i) expected *= 16;
    CHECK(total == expected);
  }
}

TEST_CASE("2-d corner cases at n=2") {
  const auto counts = count_pairs_2d(2, false);
  const auto at = [&](int k, int ell) { return counts[k * 3 + ell]; };
  CHECK(at(0, 0) == 64);  // 2^{4n-2-k-l}
  CHECK(at(2, 2) == 16);  // 4^n
  CHECK(at(0, 2) == 32);  // 2^{3n-1-k}
  CHECK(at(2, 0) == 32);
}

TEST_CASE("exhaustive mode bounds are enforced") {
  CHECK_THROWS_AS(count_pairs_1d(9, true), Error);
  CHECK_THROWS_AS(count_pairs_2d(6, true), Error);
  CHECK_NOTHROW(count_pairs_1d(9, false));
}

TEST_CASE("scaling recursion of the 1-d counts") {
  for (int n = 1; n <= 7; ++n) {
    const auto coarse = count_pairs_1d(n, false);
    const auto fine = count_pairs_1d(n + 1, false);
    for (int k = 1; k <= n; ++k) {
      CHECK(fine[k] == 2 * coarse[k - 1]);
    }
  }
}

TEST_CASE("assembled second-moment bound grows linearly") {
  CHECK(l2_bound_assembly(1, 1.0) > 0.0);
  double prev_ratio = l2_bound_assembly(2, 1.0) / 2.0;
  for (int n = 3; n <= 20; ++n) {
    const double ratio = l2_bound_assembly(n, 1.0) / n;
    CHECK(ratio <= prev_ratio + 1e-12);
    prev_ratio = ratio;
  }
  for (int n = 1; n <= 20; ++n) {
    CHECK(l2_bound_assembly(n, 1.0) <= 3.0 * n + 2.0);
  }
}

TEST_CASE("assembled bound validates its inputs") {
  CHECK_THROWS_AS(l2_bound_assembly(-1, 1.0), Error);
  CHECK_THROWS_AS(l2_bound_assembly(3, 0.0), Error);
}
