/// Minimal deterministic work partitioning: contiguous chunks, one thread
/// per chunk. Callers own all cross-task disjointness guarantees.
#pragma once

#include <cstdint>
#include <functional>

namespace stencilforge::core {

/// Runs fn(begin, end) over a partition of [0, n) using up to `workers`
/// threads (inline when workers <= 1 or n <= 1). Chunk boundaries depend
/// only on (n, workers), never on scheduling.
void parallel_chunks(std::int64_t n, int workers,
                     const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace stencilforge::core
