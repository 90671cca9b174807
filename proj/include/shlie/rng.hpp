#pragma once
#include <cstdint>

namespace shlie {

/// SplitMix64: tiny deterministic PRNG with identical output on every
/// platform; used wherever reproducibility from a seed is part of the
/// contract.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [0, n); n > 0.
  uint64_t below(uint64_t n) { return next() % n; }

  /// Integer in [lo, hi] inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

 private:
  uint64_t state_;
};

}  // namespace shlie
