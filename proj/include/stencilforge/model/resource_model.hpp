/// FLOP/byte accounting, DSP budgeting, shift-register and Block RAM sizing,
/// and the feasibility rules a configuration must satisfy on a device.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stencilforge/core/types.hpp"
#include "stencilforge/dataflow/pipeline_config.hpp"
#include "stencilforge/model/device_profile.hpp"

namespace stencilforge::model {

using dataflow::PipelineConfig;
using dataflow::compute_block_size;

/// 8*rad+1 (2D) / 12*rad+1 (3D): one multiply per term plus one add per
/// neighbor term, no sharing between directions.
int flops_per_cell(int dims, int radius);

/// 4 bytes read + 4 bytes written per cell update under full spatial reuse.
constexpr int bytes_per_cell() { return 8; }

inline double flop_byte_ratio(int dims, int radius) {
  return static_cast<double>(flops_per_cell(dims, radius)) / bytes_per_cell();
}

/// 4*rad+1 (2D) / 6*rad+1 (3D): every multiply fuses with the following add
/// except the last.
int dsps_per_cell(int dims, int radius);

/// floor(dsp_count / dsps_per_cell): ceiling on par_vec * par_time.
int par_total(const DeviceProfile& device, int dims, int radius);

/// Shift-register cells per PE: 2*rad*bsize_x + par_vec (2D),
/// 2*rad*bsize_x*bsize_y + par_vec (3D). bsize_y is ignored for 2D.
std::int64_t shift_register_cells(int dims, int radius, std::int64_t bsize_x,
                                  std::int64_t bsize_y, int par_vec);

/// Lower-bound Block RAM count: par_time * ceil(cells * 32 / block bits).
/// Real designs may need considerably more for wide parallel access.
std::int64_t bram_blocks_est(std::int64_t shift_reg_cells, int par_time,
                             const DeviceProfile& device);

struct ResourceEstimate {
  int dsps_per_cell = 0;
  std::int64_t dsps_used = 0;       // par_vec * par_time * dsps_per_cell
  double dsp_utilization = 0.0;     // dsps_used / device dsp_count
  std::int64_t shift_reg_cells_per_pe = 0;
  std::int64_t shift_reg_bits_total = 0;  // 32-bit cells across all PEs
  std::int64_t bram_blocks = 0;
};

ResourceEstimate estimate_resources(const PipelineConfig& config, int dims, int radius,
                                    const DeviceProfile& device);

struct ConstraintCheck {
  std::string rule;
  bool pass = false;
  std::string detail;
};

struct FeasibilityReport {
  std::vector<ConstraintCheck> checks;
  bool feasible = false;

  const ConstraintCheck* find(const std::string& rule) const;
  std::string failure_summary() const;
};

/// Rules, in report order:
///   parallelism-budget   par_time * par_vec <= par_total
///   temporal-alignment   (par_time * radius) mod 4 == 0
///   vector-width         par_vec is 1 or even
///   vector-alignment     bsize_x is a multiple of par_vec
///   block-interior       csize > 0 for every blocked dimension
///   onchip-memory        estimated BRAM bits <= 90% of device onchip bits
FeasibilityReport check_constraints(const PipelineConfig& config, int dims, int radius,
                                    const DeviceProfile& device);
FeasibilityReport check_constraints(const PipelineConfig& config,
                                    const core::StencilSpec& spec,
                                    const DeviceProfile& device);

}  // namespace stencilforge::model
