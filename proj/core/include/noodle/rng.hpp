#pragma once

#include <cstdint>

namespace noodle {

/// splitmix64 finalizer: the standard bijective avalanche mix.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic 64-bit generator (splitmix64). Same seed, same stream,
/// on every platform; no global state. Sub-streams for workers or samples
/// are derived with fork(), which is stable under how much of the parent
/// stream has been consumed.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed = 0) : seed_(seed), state_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  bool next_bool() { return (next_u64() >> 63) != 0; }

  /// Uniform in [0, n), unbiased by rejection.
  std::uint64_t next_below(std::uint64_t n) {
    std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Derived sub-seed i of this source's seed.
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t i) {
    return mix64(seed ^ mix64(i + 1));
  }
  RandomSource fork(std::uint64_t i) const { return RandomSource(mix(seed_, i)); }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace noodle
