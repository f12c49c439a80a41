/// Deterministic, platform-independent grid and coefficient initialization.
#pragma once

#include <cstdint>

#include "stencilforge/core/types.hpp"

namespace stencilforge::core {

/// SplitMix64 generator (Steele/Lea/Flood constants). Stable across
/// platforms; used for every seeded fill in the repository.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Top 24 bits mapped to [0, 1); exact in f32.
  float next_unit() {
    return static_cast<float>(next() >> 40) * (1.0f / 16777216.0f);
  }
};

/// Fills cell k (linear order) with the k-th SplitMix64 unit value of `seed`.
Grid grid_from_seed(int dims, const Extents& extents, std::uint64_t seed);

/// Deterministic stencil with distinct coefficients in
/// [-1, 1) / (2*dims*radius + 1); bounded so iterated application stays
/// finite. Draw order: center, then one distance-1..radius array per
/// direction in W,E,S,N[,B,A] order.
StencilSpec make_random_spec(int dims, int radius, std::uint64_t seed);

}  // namespace stencilforge::core
