#pragma once
//
// Minimal deterministic parallel-for. Work items are split into contiguous
// static chunks; each item writes only its own outputs, so the result is
// identical for any worker count.
//

#include <cstddef>
#include <thread>
#include <vector>
#include <algorithm>

namespace hmx {

int default_thread_count();
void set_default_thread_count(int n);

template <class F>
void parallel_for(std::size_t n, F&& body, int nthreads = 0) {
    if (nthreads <= 0) nthreads = default_thread_count();
    if (nthreads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(std::size_t(nthreads), n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = n * w / workers;
        const std::size_t hi = n * (w + 1) / workers;
        pool.emplace_back([lo, hi, &body] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace hmx
