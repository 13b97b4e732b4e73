#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace axikernel {

/// Deterministic parallel loop over [0, n): the index space is split into
/// contiguous blocks, one per worker. The body must write only to slots owned
/// by its index. The first exception thrown by any worker is rethrown.
template <class F>
void parallel_for(std::size_t n, F&& body, unsigned threads = 0) {
    if (n == 0) return;
    unsigned hw = threads ? threads : std::thread::hardware_concurrency();
    if (hw < 1) hw = 1;
    const std::size_t workers = std::min<std::size_t>(hw, n);
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }

    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        pool.emplace_back([&, w, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i) body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace axikernel
