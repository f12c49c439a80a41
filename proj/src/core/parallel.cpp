#include "stencilforge/core/parallel.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace stencilforge::core {

void parallel_chunks(std::int64_t n, int workers,
                     const std::function<void(std::int64_t, std::int64_t)>& fn) {
  if (n <= 0) return;
  const std::int64_t k = std::min<std::int64_t>(std::max(workers, 1), n);
  if (k == 1) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(k));
  const std::int64_t base = n / k;
  const std::int64_t rem = n % k;
  std::int64_t begin = 0;
  for (std::int64_t t = 0; t < k; ++t) {
    const std::int64_t end = begin + base + (t < rem ? 1 : 0);
    threads.emplace_back(fn, begin, end);
    begin = end;
  }
  for (auto& th : threads) th.join();
}

}  // namespace stencilforge::core
