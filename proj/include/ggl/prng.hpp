#pragma once

#include <cstdint>

namespace ggl {

// splitmix64 (Steele/Lea/Flood, public domain reference constants).
// This exact generator is part of the tool's reproducibility contract:
// every randomized sample (alpha grids, random odd N, ...) is derived
// from it, so runs with equal seeds produce byte-identical reports and
// reimplementations in other languages can reproduce the fixtures.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0,1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [lo, hi] (inclusive). Modulo bias is irrelevant at
  // the range sizes used here (<< 2^64).
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
    return lo + next() % (hi - lo + 1);
  }

 private:
  std::uint64_t state_;
};

}  // namespace ggl
