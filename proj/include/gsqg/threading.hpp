#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace gsqg {

// worker cap; reductions are chunked per worker and merged in chunk order,
// so output is bit-stable across runs at a fixed GSQG_THREADS
inline int thread_count() {
  static int cached = [] {
    if (const char* env = std::getenv("GSQG_THREADS")) {
      int v = std::atoi(env);
      if (v >= 1) return std::min(v, 64);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
  }();
  return cached;
}

// body(chunk, begin, end) over a fixed contiguous split of [0, count)
template <class Body>
inline void parallel_chunks(int count, const Body& body) {
  if (count <= 0) return;
  int k = std::min(thread_count(), count);
  if (k <= 1) {
    body(0, 0, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(k - 1);
  int base = count / k, rem = count % k, begin = 0;
  for (int c = 0; c < k; ++c) {
    int end = begin + base + (c < rem ? 1 : 0);
    if (c == k - 1) {
      body(c, begin, end);
    } else {
      pool.emplace_back([&body, c, begin, end] { body(c, begin, end); });
    }
    begin = end;
  }
  for (auto& th : pool) th.join();
}

}  // namespace gsqg
