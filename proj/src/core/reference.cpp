#include "stencilforge/core/reference.hpp"

#include <stdexcept>
#include <utility>

#include "stencilforge/core/update.hpp"

namespace stencilforge::core {

float update_cell_counted(const Grid& grid, const Coord& c, const StencilSpec& spec,
                          FlopCount& count) {
  float acc = spec.center_coeff * grid.at(c);
  ++count.muls;
  const int dirs = spec.direction_count();
  for (int i = 1; i <= spec.radius; ++i) {
    for (int d = 0; d < dirs; ++d) {
      const Direction dir = static_cast<Direction>(d);
      const float term =
          spec.dir_coeffs[d][i - 1] * grid.at(clamped_neighbor(c, dir, i, grid.extents));
      ++count.muls;
      acc = acc + term;
      ++count.adds;
    }
  }
  return acc;
}

static void check_dims(const Grid& grid, const StencilSpec& spec) {
  if (grid.dims != spec.dims) {
    throw std::invalid_argument("spec dims " + std::to_string(spec.dims) +
                                " does not match grid dims " + std::to_string(grid.dims));
  }
}

Grid step_reference(const Grid& grid, const StencilSpec& spec) {
  check_dims(grid, spec);
  Grid out(grid.dims, grid.extents);
  out.time_step = grid.time_step + 1;
  for (std::int64_t z = 0; z < grid.nz(); ++z) {
    for (std::int64_t y = 0; y < grid.ny(); ++y) {
      for (std::int64_t x = 0; x < grid.nx(); ++x) {
        out.data[out.index(x, y, z)] = update_cell(grid, Coord{x, y, z}, spec);
      }
    }
  }
  return out;
}

Grid run_reference(const Grid& grid, const StencilSpec& spec, std::int64_t iterations) {
  check_dims(grid, spec);
  if (iterations < 0) {
    throw std::invalid_argument("iterations: expected >= 0, got " +
                                std::to_string(iterations));
  }
  Grid cur = grid;
  for (std::int64_t t = 0; t < iterations; ++t) {
    cur = step_reference(cur, spec);
  }
  return cur;
}

}  // namespace stencilforge::core
