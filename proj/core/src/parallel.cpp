#include "cwt/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace cwt {

namespace {

std::atomic<int> configured_threads{0};

int default_threads() {
    if (const char* env = std::getenv("CWT_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

int thread_count() {
    int n = configured_threads.load(std::memory_order_relaxed);
    return n > 0 ? n : default_threads();
}

void set_thread_count(int n) {
    configured_threads.store(n > 0 ? n : 0, std::memory_order_relaxed);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(thread_count()), std::max<std::size_t>(n, 1));
    if (workers <= 1 || n < 2048) {
        fn(0, n);
        return;
    }
    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t begin = w * chunk;
        std::size_t end = std::min(begin + chunk, n);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace cwt
