/// The three performance knobs of the blocked pipeline.
#pragma once

#include <cstdint>
#include <string>

namespace stencilforge::dataflow {

/// Spatial block sizes, vector width and temporal depth. bsize_y applies to
/// 3D only (x is blocked for 2D; x and y for 3D; the last dimension always
/// streams). Zero means unset.
struct PipelineConfig {
  std::int64_t bsize_x = 0;
  std::int64_t bsize_y = 0;
  int par_vec = 1;
  int par_time = 1;

  std::int64_t bsize(int axis) const { return axis == 0 ? bsize_x : bsize_y; }
  std::string to_string(int dims) const;
};

/// Interior of a spatial block that is still valid after par_time chained
/// steps: bsize - 2 * (par_time * radius). Throws std::invalid_argument when
/// the temporal halo consumes the whole block.
std::int64_t compute_block_size(std::int64_t bsize, int par_time, int radius);

/// Functional validity for a simulation run: par_vec >= 1 and even when > 1,
/// bsize_x a multiple of par_vec, par_time >= 1, block sizes set for each
/// blocked dimension and large enough for the temporal halo. Throws
/// std::invalid_argument naming the offending field.
void validate_config(const PipelineConfig& config, int dims, int radius);

}  // namespace stencilforge::dataflow
