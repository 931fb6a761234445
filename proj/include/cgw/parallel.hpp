#pragma once

// Small fork-join helper. Worker count is capped by the CGW_THREADS
// environment variable (default: hardware concurrency). Results keep the
// input order, so output is deterministic regardless of scheduling.

#include <atomic>
#include <cstdlib>
#include <future>
#include <thread>
#include <vector>

namespace cgw {

inline unsigned worker_cap() {
    if (const char* env = std::getenv("CGW_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

template <class In, class Fn>
auto parallel_map(const std::vector<In>& items, Fn fn)
    -> std::vector<decltype(fn(items[0]))> {
    using Out = decltype(fn(items[0]));
    unsigned cap = worker_cap();
    std::vector<Out> out(items.size());
    if (cap <= 1 || items.size() <= 1) {
        for (size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
        return out;
    }
    std::vector<std::future<void>> futs;
    std::atomic<size_t> next{0};
    unsigned workers = std::min<size_t>(cap, items.size());
    for (unsigned w = 0; w < workers; ++w)
        futs.push_back(std::async(std::launch::async, [&] {
            for (size_t i = next.fetch_add(1); i < items.size(); i = next.fetch_add(1))
                out[i] = fn(items[i]);
        }));
    for (auto& f : futs) f.get();
    return out;
}

} // namespace cgw
