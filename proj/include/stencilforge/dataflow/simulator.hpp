/// Functional simulator of the deep pipeline: spatial blocks are gathered
/// from the grid, pushed through par_time chained PE stages, and only each
/// block's write interval is stored back. Output is bit-exact against the
/// reference executor for every legal configuration.
#pragma once

#include <cstdint>
#include <utility>

#include "stencilforge/core/types.hpp"
#include "stencilforge/dataflow/block_plan.hpp"

namespace stencilforge::dataflow {

struct PassMetrics {
  std::uint64_t cell_updates = 0;        // buffer cells updated, all active stages
  std::uint64_t external_read_bytes = 0;
  std::uint64_t external_write_bytes = 0;
  std::uint64_t est_cycles = 0;          // sum over blocks of ceil(read cells / par_vec)
};

struct SimMetrics {
  std::uint64_t passes = 0;
  std::uint64_t steps_applied = 0;
  std::uint64_t cell_updates_total = 0;   // includes redundant halo updates
  std::uint64_t cell_updates_useful = 0;  // n_cells * steps_applied
  double redundancy_ratio = 1.0;          // total / useful (1.0 when useful = 0)
  std::uint64_t external_read_bytes = 0;
  std::uint64_t external_write_bytes = 0;
  std::uint64_t est_cycles = 0;
};

struct SimOptions {
  int workers = 1;        // blocks within a pass run on up to this many threads
  bool check_halo = false;  // taint-track reads; throws if a kept cell ever
                            // consumed a buffer-edge clamp that was not also a
                            // grid-border clamp
};

/// One pass: every block gathered, `active_stages` PE steps applied (the
/// remaining stages pass values through), write intervals stored.
/// active_stages < 0 means all par_time stages.
std::pair<core::Grid, PassMetrics> simulate_pass(const core::Grid& grid,
                                                 const core::StencilSpec& spec,
                                                 const PipelineConfig& config,
                                                 const BlockPlan& plan,
                                                 int active_stages = -1,
                                                 const SimOptions& options = {});

/// ceil(iterations / par_time) passes; the final pass applies only the
/// leftover stages when par_time does not divide iterations. The result is
/// bit-identical to run_reference(grid, spec, iterations) for any legal
/// config, block sizes, par_vec and worker count.
std::pair<core::Grid, SimMetrics> simulate(const core::Grid& grid,
                                           const core::StencilSpec& spec,
                                           const PipelineConfig& config,
                                           std::int64_t iterations,
                                           const SimOptions& options = {});

}  // namespace stencilforge::dataflow
