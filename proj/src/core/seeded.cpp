#include "stencilforge/core/seeded.hpp"

namespace stencilforge::core {

Grid grid_from_seed(int dims, const Extents& extents, std::uint64_t seed) {
  Grid grid(dims, extents);
  SplitMix64 rng(seed);
  for (float& v : grid.data) {
    v = rng.next_unit();
  }
  return grid;
}

StencilSpec make_random_spec(int dims, int radius, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const float scale = 1.0f / static_cast<float>(2 * dims * radius + 1);
  auto draw = [&]() { return (rng.next_unit() * 2.0f - 1.0f) * scale; };
  const float center = draw();
  std::vector<std::vector<float>> coeffs(static_cast<std::size_t>(2 * dims));
  for (auto& arr : coeffs) {
    arr.resize(static_cast<std::size_t>(radius));
    for (float& v : arr) v = draw();
  }
  return make_stencil_spec(dims, radius, center, std::move(coeffs));
}

}  // namespace stencilforge::core
