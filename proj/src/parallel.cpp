#include "ghlab/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace ghlab {

unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("GH_LAB_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

void parallel_chunks(size_t n,
                     const std::function<void(size_t, size_t, unsigned)>& fn) {
  if (n == 0) return;
  unsigned workers = worker_count();
  size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    size_t begin = static_cast<size_t>(w) * chunk;
    if (begin >= n) break;
    size_t end = std::min(n, begin + chunk);
    threads.emplace_back(fn, begin, end, w);
  }
  for (auto& t : threads) t.join();
}

}  // namespace ghlab
