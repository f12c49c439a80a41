#include "stencilforge/dataflow/block_plan.hpp"

#include <stdexcept>

namespace stencilforge::dataflow {

std::int64_t BlockPlan::block_count() const {
  std::int64_t n = 1;
  for (const auto& axis : blocked) {
    n *= static_cast<std::int64_t>(axis.blocks.size());
  }
  return n;
}

double BlockPlan::steady_redundancy() const {
  double r = 1.0;
  for (const auto& axis : blocked) {
    r *= static_cast<double>(axis.bsize) / static_cast<double>(axis.csize);
  }
  return r;
}

static AxisBlocks plan_axis(int axis, std::int64_t extent, std::int64_t bsize,
                            std::int64_t halo, int par_time, int radius) {
  AxisBlocks out;
  out.axis = axis;
  out.bsize = bsize;
  out.csize = compute_block_size(bsize, par_time, radius);
  for (std::int64_t start = 0; start < extent; start += out.csize) {
    BlockRange b;
    b.write = {start, std::min(start + out.csize, extent)};
    b.read = {start - halo, start + out.csize + halo};
    out.blocks.push_back(b);
  }
  return out;
}

BlockPlan plan_blocks(const core::Extents& extents, const core::StencilSpec& spec,
                      const PipelineConfig& config) {
  validate_config(config, spec.dims, spec.radius);
  BlockPlan plan;
  plan.dims = spec.dims;
  plan.halo = static_cast<std::int64_t>(config.par_time) * spec.radius;
  plan.streaming_axis = spec.dims - 1;
  plan.blocked.push_back(
      plan_axis(0, extents[0], config.bsize_x, plan.halo, config.par_time, spec.radius));
  if (spec.dims == 3) {
    plan.blocked.push_back(
        plan_axis(1, extents[1], config.bsize_y, plan.halo, config.par_time, spec.radius));
  }
  return plan;
}

}  // namespace stencilforge::dataflow
