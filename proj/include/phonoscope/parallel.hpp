#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace phonoscope {

/// Resolves a worker count: explicit value wins, then PHONOSCOPE_WORKERS,
/// then 1. Always at least 1.
inline int resolve_workers(int requested) {
    if (requested >= 1) return requested;
    if (const char* env = std::getenv("PHONOSCOPE_WORKERS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 1;
}

/// Splits [0, count) into contiguous chunks, runs `body(begin, end, chunk)`
/// on each, and returns the per-chunk results in chunk order so that the
/// merged output is independent of the worker count.
template <typename Result, typename Body>
std::vector<Result> run_chunked(std::size_t count, int workers, Body&& body) {
    workers = std::max(1, std::min<int>(workers, static_cast<int>(std::max<std::size_t>(count, 1))));
    std::vector<Result> results(workers);
    if (workers == 1) {
        results[0] = body(std::size_t{0}, count, 0);
        return results;
    }
    std::vector<std::thread> pool;
    const std::size_t base = count / workers;
    const std::size_t extra = count % workers;
    std::size_t begin = 0;
    for (int c = 0; c < workers; ++c) {
        const std::size_t len = base + (static_cast<std::size_t>(c) < extra ? 1 : 0);
        const std::size_t end = begin + len;
        pool.emplace_back([&results, &body, begin, end, c] { results[c] = body(begin, end, c); });
        begin = end;
    }
    for (auto& t : pool) t.join();
    return results;
}

}  // namespace phonoscope
