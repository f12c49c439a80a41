/// Binary grid file format (STGR), little-endian:
///   magic "STGR" | u8 version=1 | u8 dims | u8 dtype=0 (f32) | u8 reserved=0
///   dims x u64 extents | row-major f32 payload
#pragma once

#include <filesystem>

#include "stencilforge/core/types.hpp"

namespace stencilforge::core {

void grid_write(const Grid& grid, const std::filesystem::path& path);

/// Round-trip with grid_write is bit-exact on extents and payload (the
/// time_step label is not persisted). Malformed input throws
/// std::runtime_error with a message naming what failed: magic, version,
/// dims, dtype, reserved byte, extents, or a truncated payload.
Grid grid_read(const std::filesystem::path& path);

}  // namespace stencilforge::core
