#include "favard/cantor.hpp"

#include <cmath>

#include "favard/error.hpp"

namespace favard {

namespace {

void check_generation(int n) {
  if (n < 0 || n > kMaxGeneration) {
    throw_argument("generation must be in [0, " + std::to_string(kMaxGeneration) +
                   "], got " + std::to_string(n));
  }
}

// Sorted numerators of the 1-d generation: all n-digit base-4 strings over
// {0, 3}. Appending a digit preserves order, so the list stays sorted.
std::vector<std::int64_t> axis_numerators(int n) {
  std::vector<std::int64_t> nums{0};
  for (int level = 0; level < n; ++level) {
    std::vector<std::int64_t> next;
    next.reserve(nums.size() * 2);
    for (std::int64_t m : nums) {
      next.push_back(4 * m);
      next.push_back(4 * m + 3);
    }
    nums.swap(next);
  }
  return nums;
}

}  // namespace

double DyadicInterval::lo() const { return std::ldexp(static_cast<double>(num), -2 * n); }
double DyadicInterval::hi() const { return std::ldexp(static_cast<double>(num + 1), -2 * n); }
double DyadicInterval::width() const { return std::ldexp(1.0, -2 * n); }

bool cantor_digits_ok(int n, std::int64_t num) {
  if (num < 0) return false;
  std::int64_t rest = num;
  for (int digit = 0; digit < n; ++digit) {
    const std::int64_t d = rest % 4;
    if (d != 0 && d != 3) return false;
    rest /= 4;
  }
  return rest == 0;
}

double DyadicSquare::x0() const { return std::ldexp(static_cast<double>(ix), -2 * n); }
double DyadicSquare::y0() const { return std::ldexp(static_cast<double>(iy), -2 * n); }
double DyadicSquare::side() const { return std::ldexp(1.0, -2 * n); }
Vec2 DyadicSquare::center() const {
  return {std::ldexp(2.0 * static_cast<double>(ix) + 1.0, -2 * n - 1),
          std::ldexp(2.0 * static_cast<double>(iy) + 1.0, -2 * n - 1)};
}

Generation::Generation(int n) : n_(n) {
  check_generation(n);
  axis_ = axis_numerators(n);
}

double Generation::side() const { return std::ldexp(1.0, -2 * n_); }

std::uint64_t Generation::square_count() const {
  const std::uint64_t per_axis = axis_.size();
  return per_axis * per_axis;
}

DyadicSquare Generation::square(std::uint64_t index) const {
  const std::uint64_t per_axis = axis_.size();
  if (index >= per_axis * per_axis) {
    throw_argument("square index out of range");
  }
  return {n_, axis_[index / per_axis], axis_[index % per_axis]};
}

std::vector<DyadicInterval> cantor_1d(int n) {
  check_generation(n);
  std::vector<DyadicInterval> intervals;
  for (std::int64_t m : axis_numerators(n)) intervals.push_back({n, m});
  return intervals;
}

Generation cantor_2d(int n) { return Generation(n); }

std::int64_t half_generation_block_count(int n) {
  check_generation(n);
  if (n % 2 != 0) throw_argument("block decomposition needs an even generation");
  return std::int64_t{1} << n;  // (2^{n/2})^2
}

HalfGenerationBlock half_generation_block(int n, std::int64_t block_index) {
  const std::int64_t count = half_generation_block_count(n);
  if (block_index < 0 || block_index >= count) {
    throw_argument("block index out of range");
  }
  const int half = n / 2;
  const auto coarse = axis_numerators(half);
  const auto fine = axis_numerators(half);  // offsets inside a block
  const std::int64_t per_axis = static_cast<std::int64_t>(coarse.size());

  const std::int64_t bx = coarse[block_index / per_axis];
  const std::int64_t by = coarse[block_index % per_axis];
  const std::int64_t scale = std::int64_t{1} << (2 * half);  // 4^{n/2}

  HalfGenerationBlock out;
  out.block = {half, bx, by};
  out.members.reserve(fine.size() * fine.size());
  for (std::int64_t fx : fine) {
    for (std::int64_t fy : fine) {
      out.members.push_back({n, bx * scale + fx, by * scale + fy});
    }
  }
  return out;
}

std::vector<HalfGenerationBlock> half_generation_blocks(int n) {
  const std::int64_t count = half_generation_block_count(n);
  std::vector<HalfGenerationBlock> blocks;
  blocks.reserve(count);
  for (std::int64_t j = 0; j < count; ++j) blocks.push_back(half_generation_block(n, j));
  return blocks;
}

std::string dyadic_decimal(std::int64_t num, int n) {
  if (n < 0 || n > kMaxGeneration + 2) throw_argument("decimal scale out of range");
  const bool negative = num < 0;
  unsigned __int128 magnitude = negative ? static_cast<unsigned __int128>(-(num + 1)) + 1
                                         : static_cast<unsigned __int128>(num);

  const unsigned digits = static_cast<unsigned>(2 * n);
  const unsigned __int128 integer = magnitude >> digits;
  unsigned __int128 frac = magnitude - (integer << digits);
  // num/4^n = (num * 5^{2n}) / 10^{2n}; the fraction has exactly 2n digits.
  for (unsigned i = 0; i < digits; ++i) frac *= 5;

  auto render = [](unsigned __int128 v) {
    if (v == 0) return std::string("0");
    std::string s;
    while (v > 0) {
      s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
      v /= 10;
    }
    return s;
  };

  std::string out = render(integer);
  if (digits > 0) {
    std::string f = render(frac);
    f.insert(f.begin(), digits - f.size(), '0');
    while (!f.empty() && f.back() == '0') f.pop_back();
    if (!f.empty()) out += "." + f;
  }
  if (negative && (integer != 0 || frac != 0)) out.insert(out.begin(), '-');
  return out;
}

}  // namespace favard
