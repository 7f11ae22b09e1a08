#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace risklab {

// Worker count used by the parallel loops. RISKLAB_THREADS caps it; results
// never depend on it because each task writes only its own output slots.
int worker_count();

// Runs body(i) for i in [0, n): contiguous static chunks, one per worker, so
// the split never depends on scheduling. body must write only slot i.
template <class Body>
void parallel_for(std::int64_t n, Body&& body) {
    if (n <= 0) return;
    const int workers = worker_count();
    if (workers <= 1 || n == 1) {
        for (std::int64_t i = 0; i < n; ++i) body(i);
        return;
    }
    const std::int64_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers) - 1);
    for (std::int64_t begin = chunk; begin < n; begin += chunk) {
        const std::int64_t end = std::min(begin + chunk, n);
        pool.emplace_back([&body, begin, end] {
            for (std::int64_t i = begin; i < end; ++i) body(i);
        });
    }
    for (std::int64_t i = 0; i < std::min(chunk, n); ++i) body(i);
    for (auto& t : pool) t.join();
}

} // namespace risklab
