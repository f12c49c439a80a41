/// Throughput prediction and metric conversions.
#pragma once

#include <cstdint>
#include <string>

#include "stencilforge/model/resource_model.hpp"

namespace stencilforge::model {

enum class Bound { compute, memory };

const char* bound_name(Bound b);

struct PredictedPerf {
  Bound bound = Bound::compute;
  double cell_in_rate = 0.0;       // cells/s entering the PE chain
  double gcell_s = 0.0;            // useful updates, GCell/s
  double gflops = 0.0;
  double gbps = 0.0;
  double redundancy_factor = 0.0;  // prod(csize/bsize) over blocked dims, in (0,1]
};

/// min(compute-bound, memory-bound) input rate, times temporal depth, times
/// the steady-state overlap discount:
///   compute bound: fmax * par_vec cells/s
///   memory bound:  bandwidth / 8 bytes-per-cell cells/s
///   gcell_s = rate * par_time * prod(csize_d / bsize_d) / 1e9
/// Rejects configs that fail check_constraints (std::invalid_argument).
PredictedPerf predict(const PipelineConfig& config, int dims, int radius,
                      const DeviceProfile& device);
PredictedPerf predict(const PipelineConfig& config, const core::StencilSpec& spec,
                      const DeviceProfile& device);

struct ConvertedMetrics {
  double gflops = 0.0;
  double gbps = 0.0;
};

/// gflops = gcell_s * flops_per_cell; gbps = gcell_s * 8.
ConvertedMetrics convert_metrics(double gcell_s, int dims, int radius);

/// Achieved throughput over the device's peak external bandwidth; values
/// above 1 mean temporal blocking beat the raw-bandwidth bound.
double roofline_ratio(double gbps, const DeviceProfile& device);

/// Largest multiple of csize in [lo, hi]: sizes the input so every block is
/// full while staying inside the benchmark range. Throws std::invalid_argument
/// when the range contains no multiple.
std::int64_t select_input_size(std::int64_t csize, std::int64_t lo, std::int64_t hi);

}  // namespace stencilforge::model
