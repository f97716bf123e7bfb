#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mtl::parallel {

/// 0 means "use the hardware concurrency".
[[nodiscard]] inline std::size_t resolve_threads(std::size_t requested) noexcept {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Calls `fn(chunk)` for every chunk index in [0, chunks) on up to `threads`
/// workers. Chunks are claimed dynamically, so callers must write results into
/// per-chunk slots and reduce them afterwards in index order.
template <class Fn>
void for_each_chunk(std::size_t chunks, std::size_t threads, Fn&& fn) {
    const std::size_t workers = std::min(resolve_threads(threads), chunks);
    if (workers <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) fn(c);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
                    try {
                        fn(c);
                    } catch (...) {
                        std::scoped_lock lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                        next.store(chunks);
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

/// Number of fixed-size chunks covering `count` items.
[[nodiscard]] constexpr std::size_t chunk_count(std::size_t count, std::size_t chunk_size) noexcept {
    return (count + chunk_size - 1) / chunk_size;
}

}  // namespace mtl::parallel
