#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace zk {

// Thread count: hardware concurrency capped by the ZK_THREADS env var.
inline int thread_count() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("ZK_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned>(cap) < n) n = static_cast<unsigned>(cap);
  }
  return static_cast<int>(n);
}

// Deterministic parallel loop: contiguous index chunks, each worker writes only
// to its own slice of the output. Results are bit-identical for any thread count.
template <class Fn>
void parallel_for(std::ptrdiff_t begin, std::ptrdiff_t end, Fn&& fn) {
  const std::ptrdiff_t n = end - begin;
  if (n <= 0) return;
  const int nt = std::min<std::ptrdiff_t>(thread_count(), n);
  if (nt <= 1) {
    for (std::ptrdiff_t i = begin; i < end; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nt);
  const std::ptrdiff_t chunk = (n + nt - 1) / nt;
  for (int t = 0; t < nt; ++t) {
    const std::ptrdiff_t lo = begin + t * chunk;
    const std::ptrdiff_t hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::ptrdiff_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace zk
