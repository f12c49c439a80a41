#include "stencilforge/core/types.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

namespace stencilforge::core {

const char* direction_name(Direction d) {
  switch (d) {
    case Direction::west: return "west";
    case Direction::east: return "east";
    case Direction::south: return "south";
    case Direction::north: return "north";
    case Direction::below: return "below";
    case Direction::above: return "above";
  }
  return "?";
}

StencilSpec make_stencil_spec(int dims, int radius, float center_coeff,
                              std::vector<std::vector<float>> dir_coeffs) {
  if (dims != 2 && dims != 3) {
    throw std::invalid_argument("dims: expected 2 or 3, got " + std::to_string(dims));
  }
  if (radius < 1) {
    throw std::invalid_argument("radius: expected >= 1, got " + std::to_string(radius));
  }
  if (!std::isfinite(center_coeff)) {
    throw std::invalid_argument("center_coeff: not finite");
  }
  const std::size_t want_dirs = static_cast<std::size_t>(2 * dims);
  if (dir_coeffs.size() != want_dirs) {
    throw std::invalid_argument("dir_coeffs: expected " + std::to_string(want_dirs) +
                                " directions, got " + std::to_string(dir_coeffs.size()));
  }
  for (std::size_t d = 0; d < dir_coeffs.size(); ++d) {
    const auto& arr = dir_coeffs[d];
    const char* name = direction_name(static_cast<Direction>(d));
    if (arr.size() != static_cast<std::size_t>(radius)) {
      throw std::invalid_argument(std::string("dir_coeffs[") + name + "]: expected " +
                                  std::to_string(radius) + " entries, got " +
                                  std::to_string(arr.size()));
    }
    for (float v : arr) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string("dir_coeffs[") + name + "]: not finite");
      }
    }
  }
  StencilSpec spec;
  spec.dims = dims;
  spec.radius = radius;
  spec.center_coeff = center_coeff;
  spec.dir_coeffs = std::move(dir_coeffs);
  return spec;
}

StencilSpec identity_spec(int dims, int radius) {
  std::vector<std::vector<float>> coeffs(
      static_cast<std::size_t>(2 * dims),
      std::vector<float>(static_cast<std::size_t>(radius), 0.0f));
  return make_stencil_spec(dims, radius, 1.0f, std::move(coeffs));
}

Grid::Grid(int dims_, Extents extents_) : dims(dims_), extents(extents_) {
  if (dims != 2 && dims != 3) {
    throw std::invalid_argument("dims: expected 2 or 3, got " + std::to_string(dims));
  }
  if (dims == 2) extents[2] = 1;
  for (int a = 0; a < dims; ++a) {
    if (extents[a] < 1) {
      throw std::invalid_argument("extents: dimension " + std::to_string(a) +
                                  " must be positive, got " + std::to_string(extents[a]));
    }
  }
  data.assign(static_cast<std::size_t>(n_cells()), 0.0f);
}

Coord Grid::coord_of(std::int64_t linear) const {
  Coord c{};
  c[0] = linear % extents[0];
  c[1] = (linear / extents[0]) % extents[1];
  c[2] = linear / (extents[0] * extents[1]);
  return c;
}

bool grids_bit_equal(const Grid& a, const Grid& b) {
  if (a.dims != b.dims || a.extents != b.extents) return false;
  if (a.data.size() != b.data.size()) return false;
  return std::memcmp(a.data.data(), b.data.data(), a.data.size() * sizeof(float)) == 0;
}

bool first_mismatch(const Grid& a, const Grid& b, Coord& out) {
  if (a.dims != b.dims || a.extents != b.extents) {
    throw std::invalid_argument("first_mismatch: grid shapes differ");
  }
  for (std::size_t k = 0; k < a.data.size(); ++k) {
    if (std::memcmp(&a.data[k], &b.data[k], sizeof(float)) != 0) {
      out = a.coord_of(static_cast<std::int64_t>(k));
      return true;
    }
  }
  return false;
}

std::string extents_to_string(int dims, const Extents& e) {
  std::string s = std::to_string(e[0]) + "x" + std::to_string(e[1]);
  if (dims == 3) s += "x" + std::to_string(e[2]);
  return s;
}

}  // namespace stencilforge::core
