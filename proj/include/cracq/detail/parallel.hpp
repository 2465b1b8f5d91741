#pragma once

#include <atomic>
#include <cstddef>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace cracq::detail {

/// Smallest index in [0, count) satisfying `bad`, or nullopt. With jobs > 1
/// the range is split into contiguous chunks; the global minimum over chunk
/// results equals the sequential answer, so the outcome does not depend on
/// the job count.
template <class Pred>
std::optional<std::size_t> find_first_index(std::size_t count, unsigned jobs, Pred bad) {
  if (count == 0) return std::nullopt;
  if (jobs <= 1 || count < 4096) {
    for (std::size_t i = 0; i < count; ++i)
      if (bad(i)) return i;
    return std::nullopt;
  }

  const unsigned hw = std::thread::hardware_concurrency();
  unsigned workers = jobs;
  if (hw != 0 && workers > 2 * hw) workers = 2 * hw;
  const std::size_t max_workers = (count + 4095) / 4096;
  if (workers > max_workers) workers = static_cast<unsigned>(max_workers);

  std::atomic<std::size_t> best{count};
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::size_t lo = w * chunk;
      const std::size_t hi = std::min(count, lo + chunk);
      for (std::size_t i = lo; i < hi; ++i) {
        // A hit below this chunk makes the rest of it irrelevant.
        if ((i & 2047u) == 0 && best.load(std::memory_order_relaxed) <= lo) return;
        if (bad(i)) {
          std::size_t cur = best.load(std::memory_order_relaxed);
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  const std::size_t found = best.load();
  if (found == count) return std::nullopt;
  return found;
}

}  // namespace cracq::detail
