#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace pftrack {

// Runs fn(i) for i in [0, count). With n_threads > 1 the range is split into
// contiguous chunks, one per worker. Callers must make fn(i) independent of
// execution order (disjoint writes, per-index RNG substreams); under that
// contract results do not depend on n_threads.
template <class Fn>
void parallel_for(int n_threads, int count, Fn&& fn) {
  if (count <= 0) return;
  const int workers = std::min(std::max(n_threads, 1), count);
  if (workers == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const int chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const int begin = w * chunk;
    const int end = std::min(begin + chunk, count);
    if (begin >= end) break;
    pool.emplace_back([begin, end, &fn] {
      for (int i = begin; i < end; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace pftrack
