#pragma once

// Deterministic range parallelism: the index space is split into fixed chunks,
// per-chunk results are combined in chunk order, so results do not depend on
// the worker count or scheduling.

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace qengel::par {

inline unsigned default_jobs() {
    unsigned n = std::thread::hardware_concurrency();
    return n ? n : 1;
}

/// Sums worker(begin, end) over [0, total) split into ~4*jobs chunks.
template <class R>
R sum_over_range(std::uint64_t total, unsigned jobs, R init,
                 const std::function<R(std::uint64_t, std::uint64_t)>& worker) {
    if (jobs <= 1 || total < 2) return worker(0, total) + init;
    std::uint64_t nchunks = std::min<std::uint64_t>(total, (std::uint64_t)jobs * 4);
    std::uint64_t chunk = (total + nchunks - 1) / nchunks;
    std::vector<R> partial(nchunks, init);
    std::atomic<std::uint64_t> next{0};
    auto run = [&] {
        for (;;) {
            std::uint64_t c = next.fetch_add(1);
            if (c >= nchunks) return;
            std::uint64_t lo = c * chunk, hi = std::min(total, lo + chunk);
            if (lo < hi) partial[c] = worker(lo, hi);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    R acc = init;
    for (auto& p : partial) acc = acc + p;
    return acc;
}

/// Concatenates worker(begin, end) vectors in chunk order.
template <class T>
std::vector<T> collect_over_range(
    std::uint64_t total, unsigned jobs,
    const std::function<std::vector<T>(std::uint64_t, std::uint64_t)>& worker) {
    if (jobs <= 1 || total < 2) return worker(0, total);
    std::uint64_t nchunks = std::min<std::uint64_t>(total, (std::uint64_t)jobs * 4);
    std::uint64_t chunk = (total + nchunks - 1) / nchunks;
    std::vector<std::vector<T>> partial(nchunks);
    std::atomic<std::uint64_t> next{0};
    auto run = [&] {
        for (;;) {
            std::uint64_t c = next.fetch_add(1);
            if (c >= nchunks) return;
            std::uint64_t lo = c * chunk, hi = std::min(total, lo + chunk);
            if (lo < hi) partial[c] = worker(lo, hi);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    std::vector<T> out;
    for (auto& p : partial) out.insert(out.end(), p.begin(), p.end());
    return out;
}

}  // namespace qengel::par
