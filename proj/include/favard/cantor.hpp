#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "favard/geometry.hpp"

namespace favard {

// Largest generation the library will enumerate (4^12 squares).
inline constexpr int kMaxGeneration = 12;

// One interval [num*4^-n, (num+1)*4^-n] of the middle-half construction.
// Valid numerators have base-4 digits in {0, 3} only.
struct DyadicInterval {
  int n = 0;
  std::int64_t num = 0;

  double lo() const;
  double hi() const;
  double width() const;
};

bool cantor_digits_ok(int n, std::int64_t num);

// Axis-aligned square of sidelength 4^-n with corner (ix*4^-n, iy*4^-n).
struct DyadicSquare {
  int n = 0;
  std::int64_t ix = 0;
  std::int64_t iy = 0;

  double x0() const;
  double y0() const;
  double side() const;
  Vec2 center() const;
};

// Generation n of the four-corner set: the product of the 1-d generation
// with itself. Squares are enumerated lexicographically by (ix, iy) and
// are materialized on demand, never stored as a 4^n list.
class Generation {
 public:
  explicit Generation(int n);

  int level() const { return n_; }
  double side() const;
  std::uint64_t square_count() const;
  DyadicSquare square(std::uint64_t index) const;

  // Sorted 1-d numerators shared by both axes (2^n entries).
  const std::vector<std::int64_t>& axis() const { return axis_; }

 private:
  int n_;
  std::vector<std::int64_t> axis_;
};

std::vector<DyadicInterval> cantor_1d(int n);
Generation cantor_2d(int n);

// Block decomposition of generation n (n even) by generation n/2: each
// block is a square of side 2^-n holding the 2^n generation-n members
// inside it. Blocks partition the generation exactly.
struct HalfGenerationBlock {
  DyadicSquare block;
  std::vector<DyadicSquare> members;
};

std::vector<HalfGenerationBlock> half_generation_blocks(int n);
HalfGenerationBlock half_generation_block(int n, std::int64_t block_index);
std::int64_t half_generation_block_count(int n);

// Exact decimal rendering of num*4^-n (dyadic rationals terminate).
std::string dyadic_decimal(std::int64_t num, int n);

}  // namespace favard
