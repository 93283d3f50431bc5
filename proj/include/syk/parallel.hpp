#pragma once
#include <cstdint>
#include <thread>
#include <vector>

namespace syk {

// Runs fn(i) for i in [0, count) across `workers` threads on contiguous
//(and therefore disjoint) index ranges. Callers store per-index results into
// preallocated slots and reduce afterwards in index order, which makes every
// statistic independent of the worker count.
template <typename Fn>
void parallel_for_index(std::uint64_t count, int workers, Fn&& fn) {
    if (workers <= 1 || count < 2) {
        for (std::uint64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const std::uint64_t w = static_cast<std::uint64_t>(workers);
    std::vector<std::thread> threads;
    threads.reserve(w);
    for (std::uint64_t t = 0; t < w; ++t) {
        const std::uint64_t begin = count * t / w;
        const std::uint64_t end = count * (t + 1) / w;
        threads.emplace_back([begin, end, &fn] {
            for (std::uint64_t i = begin; i < end; ++i) fn(i);
        });
    }
    for (auto& th : threads) th.join();
}

}  // namespace syk
