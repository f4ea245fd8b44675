// Tiny index-based worker pool.  The worker count comes from
// POLYVERT_WORKERS (default: hardware concurrency); results are merged in
// index order, so the output is independent of scheduling.
#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace polyvert {

inline size_t worker_count() {
  if (const char* env = std::getenv("POLYVERT_WORKERS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<size_t>(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

template <typename R>
std::vector<R> parallel_map(size_t n, const std::function<R(size_t)>& fn) {
  std::vector<R> out(n);
  size_t workers = std::min(worker_count(), n ? n : size_t(1));
  if (workers <= 1) {
    for (size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= n) return;
        out[i] = fn(i);
      }
    });
  }
  for (std::thread& t : pool) t.join();
  return out;
}

}  // namespace polyvert
