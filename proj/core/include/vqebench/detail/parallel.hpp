#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace vqebench::detail {

/// Run body(i) for i in [0, count) across up to `jobs` threads. Each index
/// writes only its own output slot, so the result is schedule-independent.
template <typename Body>
void parallel_for(std::size_t count, int jobs, const Body& body) {
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    const std::size_t n_threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    std::vector<std::thread> threads;
    threads.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) {
        threads.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += n_threads) body(i);
        });
    }
    for (auto& th : threads) th.join();
}

}  // namespace vqebench::detail
