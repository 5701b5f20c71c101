#pragma once

#include <cstddef>
#include <functional>

namespace ghlab {

// Number of worker threads: hardware concurrency, capped by GH_LAB_THREADS.
unsigned worker_count();

// Runs fn(chunk_begin, chunk_end, chunk_index) over [0, n) split into
// contiguous chunks. Callers combine per-chunk results in chunk order so
// reductions are deterministic regardless of the worker count.
void parallel_chunks(size_t n,
                     const std::function<void(size_t, size_t, unsigned)>& fn);

}  // namespace ghlab
