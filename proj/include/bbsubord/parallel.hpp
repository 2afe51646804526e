#ifndef BBSUBORD_PARALLEL_HPP
#define BBSUBORD_PARALLEL_HPP

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace bbsubord {

/// Worker count: BB_SUBORD_THREADS caps parallelism, 0 or unset means auto.
inline int worker_count()
{
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0)
        hw = 1;
    if (const char* env = std::getenv("BB_SUBORD_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap > 0 && static_cast<unsigned>(cap) < hw)
            return static_cast<int>(cap);
    }
    return static_cast<int>(hw);
}

/// Runs fn(first, last) over a partition of [0, n) on worker_count() threads.
/// fn must be safe for concurrent invocation on disjoint ranges.
inline void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn)
{
    const int workers = worker_count();
    if (workers <= 1 || n < 2) {
        fn(0, n);
        return;
    }
    const std::size_t w = static_cast<std::size_t>(workers);
    std::vector<std::thread> pool;
    pool.reserve(w);
    const std::size_t chunk = (n + w - 1) / w;
    for (std::size_t start = 0; start < n; start += chunk) {
        const std::size_t stop = std::min(n, start + chunk);
        pool.emplace_back(fn, start, stop);
    }
    for (auto& t : pool)
        t.join();
}

} // namespace bbsubord

#endif
