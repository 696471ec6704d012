#pragma once

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace polysum {

// Worker count: POLYSUM_JOBS if set, otherwise the logical CPU count.
inline int default_jobs() {
    if (const char* env = std::getenv("POLYSUM_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Run fn(chunk_index) for every chunk in [0, chunk_count). Chunks are
// pulled from a shared counter, so the assignment of chunks to threads
// is unspecified; fn must write only to its own chunk's slots.
template <typename Fn>
void parallel_chunks(std::size_t chunk_count, int jobs, Fn&& fn) {
    if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
    if (jobs == 1 || chunk_count <= 1) {
        for (std::size_t c = 0; c < chunk_count; ++c) fn(c);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (;;) {
            std::size_t c = next.fetch_add(1);
            if (c >= chunk_count || failed.load()) return;
            try {
                fn(c);
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    int n = jobs < static_cast<int>(chunk_count) ? jobs : static_cast<int>(chunk_count);
    pool.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failed.load() && error) std::rethrow_exception(error);
}

}  // namespace polysum
