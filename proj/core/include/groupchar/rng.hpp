#pragma once

#include <cstdint>

namespace groupchar {

// Counter-based splitmix64. Draw t is a pure function of (seed, t), so
// streams can be split deterministically across chunks.
inline constexpr const char* kRngName = "splitmix64";

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  explicit Rng(uint64_t seed, uint64_t stream = 0)
      : base_(splitmix64(seed ^ (0xA5A5A5A5A5A5A5A5ULL * (stream + 1)))) {}

  uint64_t next_u64() { return splitmix64(base_ + 0x9E3779B97F4A7C15ULL * ++counter_); }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [0, n); n must be positive.
  uint64_t next_below(uint64_t n) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(next_u64()) * n) >> 64);
  }

  // Deterministic child stream for per-chunk work.
  Rng split(uint64_t tag) const { return Rng(base_, splitmix64(tag)); }

 private:
  uint64_t base_;
  uint64_t counter_ = 0;
};

}  // namespace groupchar
