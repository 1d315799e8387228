#pragma once

#include <cstdint>

#include "trigroup/exact.hpp"

namespace trigroup {

/// SplitMix64. Self-contained so that seeded runs are reproducible
/// byte-for-byte across platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi], inclusive, via rejection sampling.
  long uniform(long lo, long hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = range * (~0ULL / range);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return lo + static_cast<long>(v % range);
  }

  /// Random scene coordinate, integer in [-100, 100].
  Rational coordinate() { return Rational(uniform(-100, 100)); }

  /// Small nonzero rational p/q, |p| <= 9, 1 <= q <= 9. Keeps bit growth
  /// of derived constructions bounded.
  Rational small_rational(bool nonzero = false) {
    long p = uniform(-9, 9);
    while (nonzero && p == 0) p = uniform(-9, 9);
    return Rational(p, uniform(1, 9));
  }

 private:
  std::uint64_t state_;
};

/// Per-trial seed derivation: decorrelates trials of one campaign while
/// staying schedule-independent.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t trial, std::uint64_t attempt = 0) {
  SplitMix64 g(base ^ (0x9e3779b97f4a7c15ULL * (trial + 1)) ^ (0xc2b2ae3d27d4eb4fULL * attempt));
  g.next();
  return g.next();
}

}  // namespace trigroup
