#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace mongedomp {

/// SplitMix64: tiny, fast, and stable across platforms, which is all the
/// instance generator needs. Not for cryptography.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Unbiased draw from {0, ..., bound-1} via rejection sampling.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be positive");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
  }
};

/// Derives an independent stream from (seed, salt_a, salt_b) so that, e.g.,
/// the cost matrix stream depends on (n, seed) only, no matter which other
/// draws an instance makes.
inline std::uint64_t mix_stream(std::uint64_t seed, std::uint64_t salt_a,
                                std::uint64_t salt_b) {
  SplitMix64 g(seed);
  g.state = g.next() ^ salt_a;
  g.state = g.next() ^ salt_b;
  return g.next();
}

}  // namespace mongedomp
