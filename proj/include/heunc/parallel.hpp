#pragma once

// Small worker fan-out for parameter sweeps. The thread count is capped by
// the HEUN_CONNECT_THREADS environment variable; results are gathered in
// input order, so output stays deterministic.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <future>
#include <string>
#include <thread>
#include <vector>

namespace heunc {

inline unsigned thread_cap() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("HEUN_CONNECT_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
        } catch (...) {
            // ignore malformed values, fall back to hardware concurrency
        }
    }
    return hw;
}

/// Apply fn to every element of items on up to thread_cap() workers; the
/// returned vector preserves input order. Exceptions propagate from the first
/// failing item (in input order).
template <typename T, typename Fn>
auto parallel_map(const std::vector<T>& items, Fn&& fn)
    -> std::vector<decltype(fn(items.front()))> {
    using R = decltype(fn(items.front()));
    const std::size_t workers =
        std::min<std::size_t>(thread_cap(), items.empty() ? 1 : items.size());
    std::vector<R> out;
    out.reserve(items.size());
    if (workers <= 1 || items.size() <= 1) {
        for (const T& it : items) out.push_back(fn(it));
        return out;
    }
    // block scheduling: up to `workers` tasks in flight, gathered in order
    std::size_t i = 0;
    while (i < items.size()) {
        const std::size_t end = std::min(items.size(), i + workers);
        std::vector<std::future<R>> block;
        block.reserve(end - i);
        for (std::size_t j = i; j < end; ++j)
            block.push_back(std::async(std::launch::async, fn, std::cref(items[j])));
        for (auto& f : block) out.push_back(f.get());
        i = end;
    }
    return out;
}

} // namespace heunc
