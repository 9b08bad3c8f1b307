#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace bolpq::detail {

/// True iff pred(i) holds for every i in [0, n). Indices are split across
/// threads; the first failure stops the remaining work. The result does not
/// depend on scheduling.
template <class Pred>
bool parallel_all_of(std::size_t n, Pred pred, std::size_t min_per_thread = 8) {
  const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  const std::size_t workers = std::min(hw, std::max<std::size_t>(1, n / min_per_thread));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!pred(i)) return false;
    }
    return true;
  }
  std::atomic<bool> ok{true};
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n && ok.load(std::memory_order_relaxed); i = next++) {
          if (!pred(i)) ok = false;
        }
      });
    }
  }
  return ok;
}

}  // namespace bolpq::detail
