#pragma once

#include <cstdint>

namespace findex {

/// splitmix64 stream. Self-contained so that seeded runs reproduce
/// byte-identically on every platform (std distributions do not promise
/// that).
struct rng {
  std::uint64_t state;

  explicit rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Uniform in [0, 1) with 53 bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }
};

/// Stateless mix of a master seed and a counter, for per-case sub-seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t counter) {
  rng r(seed ^ (0x632be59bd9b4e019ULL * (counter + 1)));
  return r.next();
}

} // namespace findex
