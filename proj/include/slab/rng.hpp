#pragma once

// Deterministic RNG for test-input generation. std::uniform_int_distribution
// is implementation-defined, which would break byte-identical reports across
// standard libraries, so sampling is done by hand on top of splitmix64.

#include <cstdint>

#include "slab/rational.hpp"

namespace slab {

struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). Rejection keeps it unbiased.
  uint64_t below(uint64_t n) {
    if (n == 0) return 0;
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  // Uniform in [lo, hi] inclusive.
  int range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  bool flip() { return next() & 1; }
};

// Per-sample generator: sample i of a run gets its own stream, so a suite
// parallelized across samples still produces the sequential report.
inline Rng sample_rng(uint64_t master_seed, uint64_t sample_index) {
  Rng mix(master_seed ^ (0xa076'1d64'78bd'642full * (sample_index + 1)));
  uint64_t s = mix.next();
  return Rng(s);
}

}  // namespace slab
