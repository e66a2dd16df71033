#ifndef REGMATCH_RNG_HPP
#define REGMATCH_RNG_HPP

#include <cassert>
#include <cstdint>

namespace regmatch {

/// Small deterministic generator (splitmix64). Self-contained so that
/// seeded runs produce identical streams on every platform and stdlib.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound), bound > 0. Rejection keeps it unbiased.
  int below(int bound) {
    assert(bound > 0);
    const auto b = static_cast<std::uint64_t>(bound);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % b;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return static_cast<int>(x % b);
  }

  /// Uniform integer in [lo, hi] inclusive.
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }

 private:
  std::uint64_t state_;
};

}  // namespace regmatch

#endif
