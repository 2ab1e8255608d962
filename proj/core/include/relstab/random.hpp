#pragma once

#include <cstdint>

namespace relstab {

/// splitmix64; every seeded choice in the library flows through this so that
/// reports are reproducible from the recorded seed alone.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound); bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) noexcept { return next() % bound; }

  /// Uniform in [lo, hi].
  long long between(long long lo, long long hi) noexcept {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Independent child stream, used to decouple sub-batteries.
  SplitMix64 fork() noexcept { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

}  // namespace relstab
