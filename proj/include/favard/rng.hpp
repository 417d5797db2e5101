#pragma once

#include <array>
#include <cstdint>

#include "favard/geometry.hpp"

namespace favard {

// Counter-based generator spec: a draw is a pure function of
// (master_seed, stream_id, sample index), so parallel schedules cannot
// change the sample sequence.
struct RngSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;
};

namespace rng {

// Philox-4x32-10 block cipher (Salmon et al. constants).
inline std::array<std::uint32_t, 4> philox_block(std::uint64_t seed,
                                                 std::uint64_t stream,
                                                 std::uint64_t index) {
  constexpr std::uint32_t kMul0 = 0xD2511F53u;
  constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  std::uint32_t c0 = static_cast<std::uint32_t>(index);
  std::uint32_t c1 = static_cast<std::uint32_t>(index >> 32);
  std::uint32_t c2 = static_cast<std::uint32_t>(stream);
  std::uint32_t c3 = static_cast<std::uint32_t>(stream >> 32);
  std::uint32_t k0 = static_cast<std::uint32_t>(seed);
  std::uint32_t k1 = static_cast<std::uint32_t>(seed >> 32);

  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c0;
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c2;
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    const std::uint32_t n0 = hi1 ^ c1 ^ k0;
    const std::uint32_t n1 = lo1;
    const std::uint32_t n2 = hi0 ^ c3 ^ k1;
    const std::uint32_t n3 = lo0;
    c0 = n0;
    c1 = n1;
    c2 = n2;
    c3 = n3;
    k0 += kWeyl0;
    k1 += kWeyl1;
  }
  return {c0, c1, c2, c3};
}

inline double to_unit(std::uint32_t hi, std::uint32_t lo) {
  const std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 32) | lo;
  return static_cast<double>(bits >> 11) * 0x1.0p-53;  // [0, 1)
}

// Two independent uniforms in [0,1) for one sample index.
inline Vec2 uniform_pair(const RngSpec& spec, std::uint64_t index) {
  const auto w = philox_block(spec.master_seed, spec.stream_id, index);
  return {to_unit(w[0], w[1]), to_unit(w[2], w[3])};
}

}  // namespace rng
}  // namespace favard
