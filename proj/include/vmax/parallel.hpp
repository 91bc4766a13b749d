#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace vmax {

// Worker count: set_thread_count() if called, else VMAX_THREADS, else hardware concurrency.
int thread_count();
void set_thread_count(int n);

// Runs body(i) for i in [0,n). Work is handed out dynamically, so body must only
// write to per-index storage; combine results afterwards in index order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

// Deterministic sum: per-index values reduced pairwise in a fixed tree.
template <class T>
T tree_sum(std::vector<T> v) {
    if (v.empty()) return T{};
    std::size_t n = v.size();
    while (n > 1) {
        std::size_t half = (n + 1) / 2;
        for (std::size_t i = 0; i + half < n; ++i) v[i] += v[i + half];
        n = half;
    }
    return v[0];
}

}  // namespace vmax
