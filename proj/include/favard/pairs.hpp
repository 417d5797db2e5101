#pragma once

#include <cstdint>
#include <vector>

#include "favard/cantor.hpp"

namespace favard {

struct PairClass {
  int k = 0;
  int ell = 0;
};

// Center-distance class of two same-generation intervals: the unique k
// with |c1 - c2| in I_k, where I_k = [4^{-k}/2 + 4^{-n}, 4^{-k} - 4^{-n}]
// for k < n and I_n = {0}. Exact integer arithmetic on numerators; a
// distance falling outside every band is an internal invariant violation.
int classify_1d(const DyadicInterval& i1, const DyadicInterval& i2);

// Componentwise classification of a square pair.
PairClass classify_2d(const DyadicSquare& q1, const DyadicSquare& q2);

// Ordered-pair counts per class. Exhaustive mode enumerates every pair
// (1-d: n <= 8, 2-d: n <= 5); formula mode evaluates the closed forms
// 2^{2n-1-k} / 2^{4n-2-k-l} with the k=n / l=n boundary cases.
std::vector<std::int64_t> count_pairs_1d(int n, bool exhaustive);
std::vector<std::int64_t> count_pairs_2d(int n, bool exhaustive);  // (n+1)^2, row-major k

// The assembled second-moment bound: formula-mode pair counts times the
// per-class overlap bound C * 4^{k-2n}, summed over the nonvanishing
// classes k <= l. Grows linearly in n.
double l2_bound_assembly(int n, double overlap_constant);

inline constexpr int kMaxExhaustive1d = 8;
inline constexpr int kMaxExhaustive2d = 5;

}  // namespace favard
