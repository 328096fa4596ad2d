#pragma once

#include <cstdint>
#include <random>

namespace hq {

using u128 = unsigned __int128;

// The generator is fixed so that reports are reproducible across platforms.
// std::uniform_int_distribution is implementation-defined, so bounded draws
// go through uniform_below instead.
using Rng = std::mt19937_64;
inline constexpr const char* kRngName = "mt19937_64";

// Uniform integer in [0, n) by rejection sampling on raw 64-bit outputs.
// n == 0 is read as 2^64.
inline uint64_t uniform_below(Rng& rng, u128 n) {
  if (n == 0 || n > u128(UINT64_MAX)) return rng();
  const uint64_t bound = static_cast<uint64_t>(n);
  const uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  for (;;) {
    uint64_t r = rng();
    if (r <= limit) return r % bound;
  }
}

}  // namespace hq
