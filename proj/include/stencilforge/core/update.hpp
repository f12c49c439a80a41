/// Single-cell update in the canonical accumulation order, shared by the
/// reference executor and the pipeline simulator so both round identically.
#pragma once

#include <algorithm>

#include "stencilforge/core/types.hpp"

namespace stencilforge::core {

/// Offsets `c` by `distance` along `d`, clamping the moved coordinate to
/// [0, extent-1]. Total for any integer coordinate.
inline Coord clamped_neighbor(Coord c, Direction d, std::int64_t distance,
                              const Extents& extents) {
  const int a = axis_of(d);
  const std::int64_t moved = c[a] + step_of(d) * distance;
  c[a] = std::clamp<std::int64_t>(moved, 0, extents[a] - 1);
  return c;
}

/// Canonical update: acc starts from the center term, then accumulates one
/// (coefficient * neighbor) product per direction, distance-major:
///   for i = 1..radius: for d = W,E,S,N[,B,A]: acc += c[d][i] * load(d, i)
/// Every multiply and add is a separately rounded f32 operation (the build
/// disables floating-point contraction).
template <typename LoadFn>
inline float star_update(const StencilSpec& spec, float center, LoadFn&& load) {
  float acc = spec.center_coeff * center;
  const int dirs = spec.direction_count();
  for (int i = 1; i <= spec.radius; ++i) {
    for (int d = 0; d < dirs; ++d) {
      const Direction dir = static_cast<Direction>(d);
      const float term = spec.dir_coeffs[d][i - 1] * load(dir, i);
      acc = acc + term;
    }
  }
  return acc;
}

/// One cell update against a full grid, all reads border-clamped.
inline float update_cell(const Grid& grid, const Coord& c, const StencilSpec& spec) {
  return star_update(spec, grid.at(c), [&](Direction d, int i) {
    return grid.at(clamped_neighbor(c, d, i, grid.extents));
  });
}

/// Floating-op tally for the instrumented executor path.
struct FlopCount {
  std::uint64_t muls = 0;
  std::uint64_t adds = 0;
  std::uint64_t total() const { return muls + adds; }
};

/// Same result as update_cell, counting each floating operation as it is
/// performed (4*dims*radius + 1 per call: 2*dims*radius + 1 muls,
/// 2*dims*radius adds).
float update_cell_counted(const Grid& grid, const Coord& c, const StencilSpec& spec,
                          FlopCount& count);

}  // namespace stencilforge::core
