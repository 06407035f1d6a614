#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace wamrec {

/// Number of worker threads to use when a caller passes 0 ("auto").
inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(begin, end) over a partition of [0, n) on `threads` workers.
///
/// Each range is disjoint, so this is safe only for loops whose iterations
/// write to disjoint outputs. Results are identical for every thread count
/// because no cross-range reduction happens here.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    threads = resolve_threads(threads);
    if (n == 0) return;
    if (threads <= 1 || n < 2) {
        fn(std::size_t{0}, n);
        return;
    }
    std::size_t nblocks = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    std::size_t chunk = (n + nblocks - 1) / nblocks;
    std::vector<std::thread> pool;
    pool.reserve(nblocks);
    for (std::size_t b = 0; b < nblocks; ++b) {
        std::size_t begin = b * chunk;
        std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : pool) t.join();
}

} // namespace wamrec
