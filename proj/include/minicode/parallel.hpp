#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

namespace minicode {

/// 0 means "all hardware threads".
inline unsigned resolve_jobs(unsigned jobs) {
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    return jobs;
}

/// Runs work(chunk, worker) for chunk = 0 .. chunks-1 on up to `jobs` threads.
/// Chunks are handed out in ascending order.
template <typename Work>
void parallel_chunks(std::uint64_t chunks, unsigned jobs, Work&& work) {
    jobs = static_cast<unsigned>(std::min<std::uint64_t>(resolve_jobs(jobs), std::max<std::uint64_t>(chunks, 1)));
    if (jobs <= 1) {
        for (std::uint64_t c = 0; c < chunks; ++c) work(c, 0u);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
        pool.emplace_back([&, w] {
            for (std::uint64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) work(c, w);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace minicode
