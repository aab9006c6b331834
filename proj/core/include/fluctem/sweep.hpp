#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace fluctem {

enum class GridScale { Linear, Log };

/// One sweep axis. count == 1 collapses to {min}; log spacing requires
/// 0 < min <= max.
struct GridSpec {
    double min = 0.0;
    double max = 0.0;
    int count = 1;
    GridScale scale = GridScale::Linear;
};

std::vector<double> build_grid(const GridSpec& spec);

/// Evaluates fn(i) for i in [0, n) on up to `threads` workers and returns
/// the results in input order regardless of completion order. fn must be
/// safe to call concurrently; the first exception thrown by any worker is
/// rethrown on the calling thread after all workers finish.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, unsigned threads, Fn&& fn) {
    std::vector<T> results(n);
    if (n == 0) return results;
    const unsigned workers = std::max(
        1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                results[i] = fn(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& thread : pool) thread.join();
    if (first_error) std::rethrow_exception(first_error);
    return results;
}

} // namespace fluctem
