/// Naive reference executor: the bit-exact oracle every other execution
/// path in the repository is checked against.
#pragma once

#include "stencilforge/core/types.hpp"

namespace stencilforge::core {

/// One full double-buffered sweep; advances time_step by 1.
Grid step_reference(const Grid& grid, const StencilSpec& spec);

/// `iterations` double-buffered sweeps (0 returns the input unchanged).
Grid run_reference(const Grid& grid, const StencilSpec& spec, std::int64_t iterations);

}  // namespace stencilforge::core
