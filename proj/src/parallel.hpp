#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mlines::detail {

inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    return std::max(1U, std::thread::hardware_concurrency());
}

// Calls body(worker, index) for every index in [0, count) on up to `jobs`
// threads. The first exception thrown by a worker is rethrown here.
template <class Body>
void parallel_for(long count, int jobs, Body&& body) {
    const int workers = static_cast<int>(std::min<long>(resolve_jobs(jobs), std::max(1L, count)));
    if (workers == 1) {
        for (long i = 0; i < count; ++i) body(0, i);
        return;
    }
    std::atomic<long> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (long i; (i = next.fetch_add(1)) < count;) body(w, i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next.store(count);
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace mlines::detail
