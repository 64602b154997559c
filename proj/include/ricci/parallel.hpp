#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ricci {

// Maps jobs <= 0 to the hardware thread count (at least 1).
inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for i in [0, count) on up to `jobs` threads. Work items are
// claimed from a shared counter, so callers must write results into
// per-index slots to keep the combined output independent of scheduling.
// The first exception thrown by any item is rethrown after all threads join.
template <typename Fn>
void parallel_for(long long count, int jobs, Fn&& fn) {
    if (count <= 0) return;
    jobs = resolve_jobs(jobs);
    if (jobs == 1 || count == 1) {
        for (long long i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<long long> next(0);
    std::atomic<bool> failed(false);
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            const long long i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) break;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
            }
        }
    };

    const long long nthreads = std::min<long long>(jobs, count);
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(nthreads));
    for (long long t = 0; t < nthreads; ++t) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace ricci
