/// Overlapped spatial blocking: write intervals tile each blocked dimension,
/// read intervals add a temporal halo of par_time * radius per side so blocks
/// never need to exchange data inside a pass.
#pragma once

#include <vector>

#include "stencilforge/core/types.hpp"
#include "stencilforge/dataflow/pipeline_config.hpp"

namespace stencilforge::dataflow {

struct Interval {
  std::int64_t begin = 0;
  std::int64_t end = 0;  // half-open
  std::int64_t size() const { return end - begin; }
};

/// One block along one blocked axis. `write` is clipped to the grid; `read`
/// keeps the full halo and may extend past the grid (out-of-grid cells are
/// never materialized; border clamping covers them).
struct BlockRange {
  Interval write;
  Interval read;
};

struct AxisBlocks {
  int axis = 0;
  std::int64_t bsize = 0;
  std::int64_t csize = 0;
  std::vector<BlockRange> blocks;
};

struct BlockPlan {
  int dims = 2;
  std::int64_t halo = 0;           // par_time * radius, per side
  int streaming_axis = 1;          // y for 2D, z for 3D
  std::vector<AxisBlocks> blocked; // x, then y for 3D

  std::int64_t block_count() const;
  /// Steady-state overlap ratio prod(bsize/csize): the redundancy a block far
  /// from every grid border pays.
  double steady_redundancy() const;
};

/// Plans both blocked axes. Throws std::invalid_argument for invalid configs
/// (including a temporal halo that exceeds the block).
BlockPlan plan_blocks(const core::Extents& extents, const core::StencilSpec& spec,
                      const PipelineConfig& config);

}  // namespace stencilforge::dataflow
