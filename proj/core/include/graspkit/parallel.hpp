#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace graspkit {

inline int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : int(hw);
}

// Static block partition of [0, n). Each worker owns a contiguous range and
// must write results positionally, so output is independent of the thread
// count. fn receives (index, worker_id).
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
  threads = resolve_thread_count(threads);
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i, 0);
    return;
  }
  std::size_t workers = std::min<std::size_t>(std::size_t(threads), n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t lo = n * w / workers;
    std::size_t hi = n * (w + 1) / workers;
    pool.emplace_back([lo, hi, w, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i, int(w));
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace graspkit
