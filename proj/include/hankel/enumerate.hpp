#pragma once
// Exhaustive enumeration of all completions x in F^length of a fixed prefix.
//
// The free entries are split into Q^depth slices by the values of the first
// `depth` free entries; depth depends only on Q and the number of free
// entries, never on the worker count. Each slice is visited by its own worker
// object in little-endian odometer order (earliest free entry fastest), and
// the workers come back in slice order so callers can merge deterministically.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <span>
#include <thread>
#include <vector>

#include "hankel/gf.hpp"

namespace hankel {

/// Slices are made at least this numerous (when the space allows) so that
/// parallel runs balance reasonably.
inline constexpr std::size_t kMinSlices = 64;

struct SlicePlan {
    std::size_t depth = 0;
    std::size_t count = 1;
};

inline SlicePlan plan_slices(std::uint32_t q, std::size_t free_entries) {
    SlicePlan plan;
    while (plan.depth < free_entries && plan.count < kMinSlices) {
        ++plan.depth;
        plan.count *= q;
    }
    return plan;
}

namespace detail {

template <class Worker>
void visit_slice(std::uint32_t q, std::span<const Elem> prefix, std::size_t length,
                 const SlicePlan& plan, std::size_t slice, Worker& worker) {
    std::vector<Elem> x(length, 0);
    std::copy(prefix.begin(), prefix.end(), x.begin());
    const std::size_t k = prefix.size();
    for (std::size_t i = 0; i < plan.depth; ++i) {
        x[k + i] = static_cast<Elem>(slice % q);
        slice /= q;
    }
    const std::size_t rest = k + plan.depth;
    const std::span<const Elem> view(x);
    while (true) {
        worker(view);
        std::size_t pos = rest;
        while (pos < length) {
            if (++x[pos] < q) {
                break;
            }
            x[pos] = 0;
            ++pos;
        }
        if (pos == length) {
            return;
        }
    }
}

}  // namespace detail

/// Runs `make()` once per slice and feeds every completion of that slice to
/// the resulting worker (`worker(std::span<const Elem>)`). Returns the workers
/// in slice order. Requires prefix.size() <= length.
template <class MakeWorker>
auto enumerate_completions(const Field& field, std::span<const Elem> prefix, std::size_t length,
                           unsigned jobs, MakeWorker make) {
    using Worker = decltype(make());
    const std::uint32_t q = field.order();
    const SlicePlan plan = plan_slices(q, length - prefix.size());
    std::vector<Worker> workers;
    workers.reserve(plan.count);
    for (std::size_t s = 0; s < plan.count; ++s) {
        workers.push_back(make());
    }
    const std::size_t threads = std::min<std::size_t>(std::max(jobs, 1u), plan.count);
    if (threads <= 1) {
        for (std::size_t s = 0; s < plan.count; ++s) {
            detail::visit_slice(q, prefix, length, plan, s, workers[s]);
        }
        return workers;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto run = [&] {
        try {
            for (std::size_t s = next++; s < plan.count; s = next++) {
                detail::visit_slice(q, prefix, length, plan, s, workers[s]);
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
            next = plan.count;
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back(run);
    }
    for (auto& th : pool) {
        th.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return workers;
}

/// Sequential visit of every tuple in F^length, odometer order.
template <class Visit>
void for_each_tuple(const Field& field, std::size_t length, Visit&& visit) {
    const std::uint32_t q = field.order();
    std::vector<Elem> x(length, 0);
    const std::span<const Elem> view(x);
    while (true) {
        visit(view);
        std::size_t pos = 0;
        while (pos < length) {
            if (++x[pos] < q) {
                break;
            }
            x[pos] = 0;
            ++pos;
        }
        if (pos == length) {
            return;
        }
    }
}

}  // namespace hankel
