#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace ekr {

/// Thread budget shared by the handful of loops worth parallelizing.
/// 0 means "hardware concurrency".
inline int& thread_budget() {
    static int budget = 0;
    return budget;
}

inline int effective_threads() {
    const int b = thread_budget();
    if (b > 0) return b;
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

/// Runs f(i) for i in [0, count) across the thread budget. f must be safe to
/// run concurrently for distinct i.
template <typename F>
inline void parallel_for(int count, F&& f) {
    const int nt = std::min(effective_threads(), std::max(count, 1));
    if (nt <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nt));
    for (int t = 0; t < nt; ++t)
        pool.emplace_back([&]() {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) f(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace ekr
