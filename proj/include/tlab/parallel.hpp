#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace tlab::detail {

/// Splits [0, n) into contiguous chunks, one per worker, and runs
/// body(worker, begin, end) on each. Workers share nothing; callers reduce
/// the per-worker results in worker order so output is independent of timing.
template <class Body>
void parallel_chunks(std::size_t n, unsigned workers, Body&& body) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
    if (workers <= 1) {
        body(0u, std::size_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t step = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(n, w * step);
        const std::size_t end = std::min(n, begin + step);
        pool.emplace_back([&body, w, begin, end] { body(w, begin, end); });
    }
    for (auto& t : pool) t.join();
}

inline unsigned worker_count(unsigned requested, std::size_t n) {
    unsigned w = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
    return static_cast<unsigned>(std::min<std::size_t>(w, std::max<std::size_t>(n, 1)));
}

}  // namespace tlab::detail
