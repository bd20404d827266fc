#pragma once

#include <bit>
#include <cstdint>
#include <random>

namespace sukp {

// All stochastic decisions go through the two helpers below instead of the
// <random> distributions, whose draw sequences differ between standard
// library implementations. mt19937_64 itself is fully specified, so seeded
// runs reproduce across platforms.
using Rng = std::mt19937_64;

// Uniform double in [0, 1) with 53 random bits.
inline double random_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n). Consumes no generator state for n <= 1.
inline std::uint64_t random_below(Rng& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t mask = std::bit_ceil(n) - 1;
  for (;;) {
    const std::uint64_t v = rng() & mask;
    if (v < n) return v;
  }
}

}  // namespace sukp
