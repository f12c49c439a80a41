#include "stencilforge/dataflow/simulator.hpp"

#include <stdexcept>
#include <vector>

#include "stencilforge/core/parallel.hpp"
#include "stencilforge/core/update.hpp"

namespace stencilforge::dataflow {

using core::Coord;
using core::Direction;
using core::Extents;
using core::Grid;
using core::StencilSpec;

namespace {

Interval clip(const Interval& iv, std::int64_t extent) {
  return {std::max<std::int64_t>(iv.begin, 0), std::min(iv.end, extent)};
}

/// One unit of pass work: the in-grid coordinates a block's buffer holds and
/// the region it writes back. Streaming axes carry their full extent.
struct BlockTask {
  std::array<Interval, 3> buf;
  std::array<Interval, 3> write;
};

std::vector<BlockTask> make_tasks(const BlockPlan& plan, const Extents& extents) {
  std::vector<BlockTask> tasks;
  const auto& xb = plan.blocked[0];
  const bool blocked_y = plan.blocked.size() > 1;
  const std::size_t ny_blocks = blocked_y ? plan.blocked[1].blocks.size() : 1;
  for (const auto& bx : xb.blocks) {
    for (std::size_t j = 0; j < ny_blocks; ++j) {
      BlockTask t;
      t.buf[0] = clip(bx.read, extents[0]);
      t.write[0] = bx.write;
      if (blocked_y) {
        const auto& by = plan.blocked[1].blocks[j];
        t.buf[1] = clip(by.read, extents[1]);
        t.write[1] = by.write;
      } else {
        t.buf[1] = {0, extents[1]};
        t.write[1] = {0, extents[1]};
      }
      t.buf[2] = {0, extents[2]};
      t.write[2] = {0, extents[2]};
      tasks.push_back(t);
    }
  }
  return tasks;
}

/// Gathers the buffer, applies `active` chained PE steps, stores the write
/// region. Neighbor reads clamp on global coordinates first (grid borders),
/// then fall back to the buffer edge for reads that leave the read region;
/// the halo guarantees kept cells never depend on such reads. With Checked
/// set, that guarantee is verified by taint propagation.
template <bool Checked>
void run_block(const Grid& in, Grid& out, const StencilSpec& spec, const BlockTask& task,
               int active, int par_vec, PassMetrics& m) {
  const Extents& ext = in.extents;
  const std::int64_t bx0 = task.buf[0].begin, sx = task.buf[0].size();
  const std::int64_t by0 = task.buf[1].begin, sy = task.buf[1].size();
  const std::int64_t bz0 = task.buf[2].begin, sz = task.buf[2].size();
  const std::int64_t cells = sx * sy * sz;

  auto lidx = [&](std::int64_t lx, std::int64_t ly, std::int64_t lz) {
    return (lz * sy + ly) * sx + lx;
  };

  std::vector<float> prev(static_cast<std::size_t>(cells));
  std::vector<float> next(static_cast<std::size_t>(cells));
  std::vector<unsigned char> taint_prev, taint_next;
  if constexpr (Checked) {
    taint_prev.assign(static_cast<std::size_t>(cells), 0);
    taint_next.assign(static_cast<std::size_t>(cells), 0);
  }

  for (std::int64_t lz = 0; lz < sz; ++lz) {
    for (std::int64_t ly = 0; ly < sy; ++ly) {
      const float* src = &in.data[in.index(bx0, by0 + ly, bz0 + lz)];
      float* dst = &prev[lidx(0, ly, lz)];
      for (std::int64_t lx = 0; lx < sx; ++lx) dst[lx] = src[lx];
    }
  }
  m.external_read_bytes += static_cast<std::uint64_t>(cells) * sizeof(float);
  m.est_cycles += static_cast<std::uint64_t>((cells + par_vec - 1) / par_vec);

  for (int s = 0; s < active; ++s) {
    for (std::int64_t lz = 0; lz < sz; ++lz) {
      for (std::int64_t ly = 0; ly < sy; ++ly) {
        for (std::int64_t lx = 0; lx < sx; ++lx) {
          const Coord g{bx0 + lx, by0 + ly, bz0 + lz};
          bool tainted = false;
          if constexpr (Checked) tainted = taint_prev[lidx(lx, ly, lz)] != 0;
          const float value =
              core::star_update(spec, prev[lidx(lx, ly, lz)], [&](Direction d, int i) {
                const Coord n = core::clamped_neighbor(g, d, i, ext);
                std::int64_t nlx = n[0] - bx0;
                std::int64_t nly = n[1] - by0;
                const std::int64_t nlz = n[2] - bz0;
                if constexpr (Checked) {
                  if (nlx < 0 || nlx >= sx || nly < 0 || nly >= sy) {
                    tainted = true;  // read fell off the buffer, not the grid
                  }
                }
                nlx = std::clamp<std::int64_t>(nlx, 0, sx - 1);
                nly = std::clamp<std::int64_t>(nly, 0, sy - 1);
                const std::int64_t k = lidx(nlx, nly, nlz);
                if constexpr (Checked) tainted = tainted || taint_prev[k] != 0;
                return prev[static_cast<std::size_t>(k)];
              });
          next[lidx(lx, ly, lz)] = value;
          if constexpr (Checked) taint_next[lidx(lx, ly, lz)] = tainted ? 1 : 0;
        }
      }
    }
    prev.swap(next);
    if constexpr (Checked) taint_prev.swap(taint_next);
  }
  m.cell_updates += static_cast<std::uint64_t>(cells) * static_cast<std::uint64_t>(active);

  std::uint64_t written = 0;
  for (std::int64_t z = task.write[2].begin; z < task.write[2].end; ++z) {
    for (std::int64_t y = task.write[1].begin; y < task.write[1].end; ++y) {
      const std::int64_t lx0 = task.write[0].begin - bx0;
      const float* src = &prev[lidx(lx0, y - by0, z - bz0)];
      float* dst = &out.data[out.index(task.write[0].begin, y, z)];
      for (std::int64_t i = 0; i < task.write[0].size(); ++i) {
        if constexpr (Checked) {
          if (taint_prev[lidx(lx0 + i, y - by0, z - bz0)]) {
            throw std::logic_error("halo check failed: kept cell (" +
                                   std::to_string(task.write[0].begin + i) + "," +
                                   std::to_string(y) + "," + std::to_string(z) +
                                   ") consumed a buffer-edge clamped read");
          }
        }
        dst[i] = src[i];
      }
      written += static_cast<std::uint64_t>(task.write[0].size());
    }
  }
  m.external_write_bytes += written * sizeof(float);
}

}  // namespace

std::pair<Grid, PassMetrics> simulate_pass(const Grid& grid, const StencilSpec& spec,
                                           const PipelineConfig& config,
                                           const BlockPlan& plan, int active_stages,
                                           const SimOptions& options) {
  if (grid.dims != spec.dims) {
    throw std::invalid_argument("spec dims " + std::to_string(spec.dims) +
                                " does not match grid dims " + std::to_string(grid.dims));
  }
  const int active = active_stages < 0 ? config.par_time : active_stages;
  if (active > config.par_time) {
    throw std::invalid_argument("active_stages " + std::to_string(active_stages) +
                                " exceeds par_time " + std::to_string(config.par_time));
  }

  Grid out(grid.dims, grid.extents);
  out.time_step = grid.time_step + active;
  const std::vector<BlockTask> tasks = make_tasks(plan, grid.extents);
  std::vector<PassMetrics> per_task(tasks.size());

  core::parallel_chunks(
      static_cast<std::int64_t>(tasks.size()), options.workers,
      [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t t = begin; t < end; ++t) {
          if (options.check_halo) {
            run_block<true>(grid, out, spec, tasks[static_cast<std::size_t>(t)], active,
                            config.par_vec, per_task[static_cast<std::size_t>(t)]);
          } else {
            run_block<false>(grid, out, spec, tasks[static_cast<std::size_t>(t)], active,
                             config.par_vec, per_task[static_cast<std::size_t>(t)]);
          }
        }
      });

  PassMetrics total;
  for (const PassMetrics& pm : per_task) {
    total.cell_updates += pm.cell_updates;
    total.external_read_bytes += pm.external_read_bytes;
    total.external_write_bytes += pm.external_write_bytes;
    total.est_cycles += pm.est_cycles;
  }
  return {std::move(out), total};
}

std::pair<Grid, SimMetrics> simulate(const Grid& grid, const StencilSpec& spec,
                                     const PipelineConfig& config, std::int64_t iterations,
                                     const SimOptions& options) {
  if (iterations < 0) {
    throw std::invalid_argument("iterations: expected >= 0, got " +
                                std::to_string(iterations));
  }
  SimMetrics metrics;
  if (iterations == 0) {
    return {grid, metrics};
  }

  const BlockPlan plan = plan_blocks(grid.extents, spec, config);
  const std::int64_t passes = (iterations + config.par_time - 1) / config.par_time;
  const int leftover = static_cast<int>(iterations % config.par_time);

  Grid cur = grid;
  for (std::int64_t p = 0; p < passes; ++p) {
    const bool last = (p == passes - 1);
    const int active = (last && leftover != 0) ? leftover : config.par_time;
    auto [next, pm] = simulate_pass(cur, spec, config, plan, active, options);
    cur = std::move(next);
    metrics.cell_updates_total += pm.cell_updates;
    metrics.external_read_bytes += pm.external_read_bytes;
    metrics.external_write_bytes += pm.external_write_bytes;
    metrics.est_cycles += pm.est_cycles;
  }
  metrics.passes = static_cast<std::uint64_t>(passes);
  metrics.steps_applied = static_cast<std::uint64_t>(iterations);
  metrics.cell_updates_useful =
      static_cast<std::uint64_t>(grid.n_cells()) * static_cast<std::uint64_t>(iterations);
  metrics.redundancy_ratio =
      metrics.cell_updates_useful == 0
          ? 1.0
          : static_cast<double>(metrics.cell_updates_total) /
                static_cast<double>(metrics.cell_updates_useful);
  return {std::move(cur), metrics};
}

}  // namespace stencilforge::dataflow
