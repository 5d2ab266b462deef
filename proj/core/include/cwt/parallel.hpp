#pragma once

#include <cstddef>
#include <functional>

namespace cwt {

// Worker count for data-parallel loops. Resolution order: explicit
// set_thread_count(), CWT_THREADS env var, hardware concurrency.
int thread_count();
void set_thread_count(int n);

// Runs fn over [0, n) in contiguous chunks, one chunk per worker. Each index
// is touched exactly once and chunks never overlap, so results are identical
// for every worker count as long as fn writes only to its own indices.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace cwt
