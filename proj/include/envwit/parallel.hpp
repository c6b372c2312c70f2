#pragma once

// Deterministic fork-join helper for grid sweeps. Work item i writes only to
// slot i of its output, so results are identical for any worker count. The
// ENVELOPE_WITNESS_THREADS environment variable caps the number of workers.

#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace envwit {

inline int worker_count(std::size_t n_items) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  std::size_t cap = hw;
  if (const char* env = std::getenv("ENVELOPE_WITNESS_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && parsed >= 1) cap = static_cast<std::size_t>(parsed);
  }
  if (cap > n_items) cap = n_items;
  return static_cast<int>(cap == 0 ? 1 : cap);
}

// Runs fn(i) for i in [0, n) on up to worker_count(n) threads, contiguous
// index blocks per thread. The first exception thrown by any item, if any,
// is rethrown on the calling thread after the join.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  const int workers = worker_count(n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, w, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);
}

}  // namespace envwit
