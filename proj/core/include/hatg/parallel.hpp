#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace hatg {

/// Worker budget. HG_THREADS caps it; default is machine parallelism.
inline unsigned worker_count() {
    static const unsigned cached = [] {
        unsigned n = std::max(1u, std::thread::hardware_concurrency());
        if (const char* env = std::getenv("HG_THREADS")) {
            char* end = nullptr;
            const long v = std::strtol(env, &end, 10);
            if (end != env && v > 0) n = static_cast<unsigned>(std::min<long>(v, 1024));
        }
        return n;
    }();
    return cached;
}

/// Splits [0, total) into one contiguous block per worker and runs
/// fn(block_index, begin, end) on each. Callers get determinism by reducing
/// block results in block order.
template <typename Fn>
void parallel_blocks(std::uint64_t total, Fn&& fn) {
    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(worker_count(), std::max<std::uint64_t>(total, 1)));
    if (workers <= 1) {
        fn(0u, std::uint64_t{0}, total);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = total / workers;
    const std::uint64_t rem = total % workers;
    std::uint64_t begin = 0;
    for (unsigned b = 0; b < workers; ++b) {
        const std::uint64_t len = chunk + (b < rem ? 1 : 0);
        pool.emplace_back([&fn, b, begin, len] { fn(b, begin, begin + len); });
        begin += len;
    }
    for (auto& t : pool) t.join();
}

} // namespace hatg
