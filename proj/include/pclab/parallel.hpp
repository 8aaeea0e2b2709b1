#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace pclab {

// Worker count: PCLAB_THREADS caps it, hardware concurrency is the default.
inline int thread_count() {
  int hw = int(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  int n = hw > 8 ? 8 : hw;
  if (const char* env = std::getenv("PCLAB_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1 && cap < n) n = cap;
    if (cap >= 1 && hw == 1) n = 1;
    if (cap >= 1) n = cap < hw ? cap : hw;
  }
  return n < 1 ? 1 : n;
}

// Index-parallel loop; the body must only write to its own index so results
// are identical regardless of the worker count.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  int workers = thread_count();
  if (workers <= 1 || count < 64) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (std::size_t i = std::size_t(w); i < count; i += std::size_t(workers)) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace pclab
