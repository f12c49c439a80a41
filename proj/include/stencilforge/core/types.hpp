/// Core domain types: stencil descriptions and dense scalar grids.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace stencilforge::core {

/// Directed star-stencil neighbors. The pair order (negative, positive) per
/// axis and the axis order (x, y, z) fix the canonical accumulation order
/// used by every executor in this repository.
enum class Direction : int {
  west = 0,   // -x
  east = 1,   // +x
  south = 2,  // -y
  north = 3,  // +y
  below = 4,  // -z
  above = 5,  // +z
};

constexpr int kMaxDirections = 6;

constexpr int axis_of(Direction d) { return static_cast<int>(d) / 2; }
constexpr std::int64_t step_of(Direction d) {
  return (static_cast<int>(d) % 2 == 0) ? -1 : +1;
}

const char* direction_name(Direction d);

/// Grid coordinate (x, y, z); z stays 0 for 2D grids.
using Coord = std::array<std::int64_t, 3>;

/// Extents per dimension (nx, ny, nz); nz is 1 for 2D grids.
using Extents = std::array<std::int64_t, 3>;

/// A star-shaped stencil: center coefficient plus one coefficient per
/// (direction, distance) pair. Distances run 1..radius; sharing between
/// directions is deliberately not expressed, so the worst case (all
/// coefficients distinct) is what executors and models see.
struct StencilSpec {
  int dims = 2;          // 2 or 3
  int radius = 1;        // max neighbor distance per axis
  float center_coeff = 0.0f;
  // Indexed by Direction; exactly 2*dims arrays of exactly `radius` entries.
  std::vector<std::vector<float>> dir_coeffs;

  int direction_count() const { return 2 * dims; }
  float coeff(Direction d, int distance) const {
    return dir_coeffs[static_cast<int>(d)][distance - 1];
  }
};

/// Validates shape and finiteness; throws std::invalid_argument naming the
/// offending field.
StencilSpec make_stencil_spec(int dims, int radius, float center_coeff,
                              std::vector<std::vector<float>> dir_coeffs);

/// Identity stencil (center 1, all neighbor coefficients 0).
StencilSpec identity_spec(int dims, int radius);

/// Dense row-major single-precision field. Layout: x fastest, then y,
/// then z (index = (z*ny + y)*nx + x).
struct Grid {
  int dims = 2;
  Extents extents{1, 1, 1};
  std::int64_t time_step = 0;
  std::vector<float> data;

  Grid() = default;
  Grid(int dims_, Extents extents_);

  std::int64_t nx() const { return extents[0]; }
  std::int64_t ny() const { return extents[1]; }
  std::int64_t nz() const { return extents[2]; }
  std::int64_t n_cells() const { return extents[0] * extents[1] * extents[2]; }

  std::int64_t index(std::int64_t x, std::int64_t y, std::int64_t z = 0) const {
    return (z * extents[1] + y) * extents[0] + x;
  }
  std::int64_t index(const Coord& c) const { return index(c[0], c[1], c[2]); }

  float at(const Coord& c) const { return data[index(c)]; }
  float& at(const Coord& c) { return data[index(c)]; }

  Coord coord_of(std::int64_t linear) const;
};

/// Bitwise equality of dims, extents and cell data (the time_step label is
/// bookkeeping and not compared).
bool grids_bit_equal(const Grid& a, const Grid& b);

/// First cell (in linear order) whose bits differ, if any. Grids must have
/// matching shape.
bool first_mismatch(const Grid& a, const Grid& b, Coord& out);

std::string extents_to_string(int dims, const Extents& e);

}  // namespace stencilforge::core
