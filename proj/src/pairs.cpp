#include "favard/pairs.hpp"

#include <cmath>

#include "favard/error.hpp"

namespace favard {

namespace {

void check_formula_range(int n, int max_n) {
  if (n < 0 || n > max_n) {
    throw_argument("generation must be in [0, " + std::to_string(max_n) + "]");
  }
}

int classify_distance(int n, std::int64_t distance) {
  if (distance == 0) return n;
  for (int k = 0; k < n; ++k) {
    const std::int64_t scale = std::int64_t{1} << (2 * (n - k));  // 4^{n-k}
    if (distance >= scale / 2 + 1 && distance <= scale - 1) return k;
  }
  throw_internal("pair distance " + std::to_string(distance) +
                 " falls outside every class band at n=" + std::to_string(n));
}

}  // namespace

int classify_1d(const DyadicInterval& i1, const DyadicInterval& i2) {
  if (i1.n != i2.n) throw_argument("intervals must share a generation");
  const std::int64_t d = i1.num >= i2.num ? i1.num - i2.num : i2.num - i1.num;
  return classify_distance(i1.n, d);
}

PairClass classify_2d(const DyadicSquare& q1, const DyadicSquare& q2) {
  if (q1.n != q2.n) throw_argument("squares must share a generation");
  const std::int64_t dx = q1.ix >= q2.ix ? q1.ix - q2.ix : q2.ix - q1.ix;
  const std::int64_t dy = q1.iy >= q2.iy ? q1.iy - q2.iy : q2.iy - q1.iy;
  return {classify_distance(q1.n, dx), classify_distance(q1.n, dy)};
}

std::vector<std::int64_t> count_pairs_1d(int n, bool exhaustive) {
  if (exhaustive) {
    if (n < 0 || n > kMaxExhaustive1d) {
      throw_argument("exhaustive 1-d counting supports n <= " +
                     std::to_string(kMaxExhaustive1d));
    }
    const auto intervals = cantor_1d(n);
    std::vector<std::int64_t> counts(n + 1, 0);
    for (const DyadicInterval& a : intervals) {
      for (const DyadicInterval& b : intervals) {
        ++counts[classify_1d(a, b)];
      }
    }
    return counts;
  }
  check_formula_range(n, 30);
  std::vector<std::int64_t> counts(n + 1, 0);
  for (int k = 0; k < n; ++k) counts[k] = std::int64_t{1} << (2 * n - 1 - k);
  counts[n] = std::int64_t{1} << n;
  return counts;
}

std::vector<std::int64_t> count_pairs_2d(int n, bool exhaustive) {
  const auto at = [n](std::vector<std::int64_t>& m, int k, int ell) -> std::int64_t& {
    return m[static_cast<std::size_t>(k) * (n + 1) + ell];
  };
  if (exhaustive) {
    if (n < 0 || n > kMaxExhaustive2d) {
      throw_argument("exhaustive 2-d counting supports n <= " +
                     std::to_string(kMaxExhaustive2d));
    }
    const Generation gen = cantor_2d(n);
    std::vector<std::int64_t> counts((n + 1) * (n + 1), 0);
    const std::uint64_t total = gen.square_count();
    for (std::uint64_t i = 0; i < total; ++i) {
      const DyadicSquare qi = gen.square(i);
      for (std::uint64_t j = 0; j < total; ++j) {
        const PairClass c = classify_2d(qi, gen.square(j));
        ++at(counts, c.k, c.ell);
      }
    }
    return counts;
  }
  check_formula_range(n, 15);
  std::vector<std::int64_t> counts((n + 1) * (n + 1), 0);
  for (int k = 0; k < n; ++k) {
    for (int ell = 0; ell < n; ++ell) {
      at(counts, k, ell) = std::int64_t{1} << (4 * n - 2 - k - ell);
    }
    at(counts, k, n) = std::int64_t{1} << (3 * n - 1 - k);
    at(counts, n, k) = std::int64_t{1} << (3 * n - 1 - k);
  }
  at(counts, n, n) = std::int64_t{1} << (2 * n);
  return counts;
}

double l2_bound_assembly(int n, double overlap_constant) {
  if (n < 0) throw_argument("generation must be >= 0");
  if (!(overlap_constant > 0.0)) throw_argument("overlap constant must be positive");
  double total = 0.0;
  for (int k = 0; k < n; ++k) {
    for (int ell = k; ell < n; ++ell) {
      // count(k,l) * 4^{k-2n} = 2^{4n-2-k-l} * 2^{2k-4n} = 2^{k-l-2}
      total += std::exp2(static_cast<double>(k - ell - 2));
    }
    // count(k,n) * 4^{k-2n} = 2^{3n-1-k} * 2^{2k-4n} = 2^{k-n-1}
    total += std::exp2(static_cast<double>(k - n - 1));
  }
  total += 1.0;  // 4^n pairs of class (n,n), each bounded by 4^{-n}
  return overlap_constant * total;
}

}  // namespace favard
