#include "vrjp/prf.hpp"

#include <cmath>

namespace vrjp {

namespace {

inline std::uint64_t rotl64(std::uint64_t x, unsigned r) {
  return (x << r) | (x >> (64u - r));
}

// Rotation schedule for the 2x64 variant; repeats with period 8.
constexpr unsigned kRotations[8] = {16, 42, 12, 31, 16, 32, 24, 21};

// Threefish key-schedule parity constant.
constexpr std::uint64_t kParity = 0x1BD11BDAA9FC1A22ull;

}  // namespace

Key128 threefry2x64(Key128 counter, Key128 key) {
  const std::uint64_t ks[3] = {key.w0, key.w1, kParity ^ key.w0 ^ key.w1};

  std::uint64_t x0 = counter.w0 + ks[0];
  std::uint64_t x1 = counter.w1 + ks[1];

  std::uint64_t inject = 0;
  for (unsigned round = 0; round < 20; ++round) {
    x0 += x1;
    x1 = rotl64(x1, kRotations[round % 8]);
    x1 ^= x0;
    if ((round + 1) % 4 == 0) {
      ++inject;
      x0 += ks[inject % 3];
      x1 += ks[(inject + 1) % 3] + inject;
    }
  }
  return {x0, x1};
}

double uniform_from_word(std::uint64_t word) {
  // 53-bit mantissa, offset by half a ulp: lands strictly inside (0,1).
  return (static_cast<double>(word >> 11) + 0.5) * 0x1.0p-53;
}

double exp_draw(const Key128& stream_key, std::uint64_t index) {
  const Key128 block =
      threefry2x64({index, static_cast<std::uint64_t>(KeyTag::kDraw)}, stream_key);
  return -std::log(uniform_from_word(block.w0));
}

double uniform_draw(const Key128& stream_key, std::uint64_t index) {
  const Key128 block =
      threefry2x64({index, static_cast<std::uint64_t>(KeyTag::kDraw)}, stream_key);
  return uniform_from_word(block.w0);
}

Key128 derive_key(const Key128& parent, KeyTag tag, std::uint64_t salt) {
  return threefry2x64({salt, static_cast<std::uint64_t>(tag)}, parent);
}

Key128 master_key(std::uint64_t seed) {
  return threefry2x64({seed, static_cast<std::uint64_t>(KeyTag::kRootVertex)},
                      {seed ^ kParity, 0x9E3779B97F4A7C15ull});
}

}  // namespace vrjp
