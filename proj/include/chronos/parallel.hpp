#pragma once

#include <cstddef>
#include <functional>

namespace chronos {

// Worker count honouring CHRONOS_THREADS (unset or 0 means hardware concurrency).
std::size_t worker_count();

// Calls body(i) for every i in [0, count). Work is split into contiguous blocks;
// body must only write to per-index storage so results do not depend on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

// Pairwise (fixed-tree) sum; the result depends only on the input order.
template <typename T, typename Range>
T pairwise_sum(const Range& values, std::size_t begin, std::size_t end) {
    if (end - begin <= 8) {
        T acc{};
        for (std::size_t i = begin; i < end; ++i) acc += values[i];
        return acc;
    }
    const std::size_t mid = begin + (end - begin) / 2;
    return pairwise_sum<T>(values, begin, mid) + pairwise_sum<T>(values, mid, end);
}

}  // namespace chronos
