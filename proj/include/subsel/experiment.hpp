#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "subsel/geometry.hpp"
#include "subsel/selection.hpp"

namespace subsel {

struct ExperimentResult {
    std::vector<std::uint64_t> seeds;
    std::vector<SelectionResult> runs;
    std::size_t median_run = 0;  ///< index into runs
};

/// Repeats `spec` with seeds spec.seed, spec.seed + 1, ... and picks the run whose
/// indicator value is the median (order statistic (repeats + 1) / 2; ties go to the
/// earlier seed). Runs are independent and may execute on `threads` workers
/// (0 = hardware concurrency); results do not depend on the thread count.
ExperimentResult run_experiment(const PointSet& s, const SelectionSpec& spec, std::size_t repeats,
                                std::size_t threads = 0);

/// Index of the median of `values` under the rule above.
std::size_t median_index(const std::vector<double>& values);

/// Runs fn(i) for i in [0, count) on up to `threads` workers.
template <typename Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn&& fn);

}  // namespace subsel

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace subsel {

template <typename Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn&& fn) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> workers;
        for (std::size_t t = 0; t < threads; ++t)
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        fn(i);
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (!error) error = std::current_exception();
                    }
                }
            });
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace subsel
