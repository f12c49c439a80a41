#include "stencilforge/dataflow/pipeline_config.hpp"

#include <stdexcept>

namespace stencilforge::dataflow {

std::string PipelineConfig::to_string(int dims) const {
  std::string s = "bsize_x=" + std::to_string(bsize_x);
  if (dims == 3) s += " bsize_y=" + std::to_string(bsize_y);
  s += " par_vec=" + std::to_string(par_vec);
  s += " par_time=" + std::to_string(par_time);
  return s;
}

std::int64_t compute_block_size(std::int64_t bsize, int par_time, int radius) {
  if (bsize < 1) {
    throw std::invalid_argument("bsize: expected >= 1, got " + std::to_string(bsize));
  }
  if (par_time < 1) {
    throw std::invalid_argument("par_time: expected >= 1, got " + std::to_string(par_time));
  }
  if (radius < 1) {
    throw std::invalid_argument("radius: expected >= 1, got " + std::to_string(radius));
  }
  const std::int64_t csize = bsize - 2 * static_cast<std::int64_t>(par_time) * radius;
  if (csize <= 0) {
    throw std::invalid_argument(
        "bsize " + std::to_string(bsize) + ": temporal halo exceeds block (2*" +
        std::to_string(par_time) + "*" + std::to_string(radius) + " >= bsize)");
  }
  return csize;
}

void validate_config(const PipelineConfig& config, int dims, int radius) {
  if (dims != 2 && dims != 3) {
    throw std::invalid_argument("dims: expected 2 or 3, got " + std::to_string(dims));
  }
  if (config.par_vec < 1) {
    throw std::invalid_argument("par_vec: expected >= 1, got " +
                                std::to_string(config.par_vec));
  }
  if (config.par_vec > 1 && config.par_vec % 2 != 0) {
    throw std::invalid_argument("par_vec: expected 1 or an even value, got " +
                                std::to_string(config.par_vec));
  }
  if (config.par_time < 1) {
    throw std::invalid_argument("par_time: expected >= 1, got " +
                                std::to_string(config.par_time));
  }
  if (config.bsize_x < 1) {
    throw std::invalid_argument("bsize_x: expected >= 1, got " +
                                std::to_string(config.bsize_x));
  }
  if (config.bsize_x % config.par_vec != 0) {
    throw std::invalid_argument("bsize_x: " + std::to_string(config.bsize_x) +
                                " is not a multiple of par_vec " +
                                std::to_string(config.par_vec));
  }
  if (dims == 3) {
    if (config.bsize_y < 1) {
      throw std::invalid_argument("bsize_y: required for 3D, got " +
                                  std::to_string(config.bsize_y));
    }
  } else if (config.bsize_y != 0) {
    throw std::invalid_argument("bsize_y: set to " + std::to_string(config.bsize_y) +
                                " but grids are 2D (only x is blocked)");
  }
  compute_block_size(config.bsize_x, config.par_time, radius);
  if (dims == 3) {
    compute_block_size(config.bsize_y, config.par_time, radius);
  }
}

}  // namespace stencilforge::dataflow
