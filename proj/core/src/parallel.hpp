#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace delsub::detail {

// Evaluates fn(0..chunks-1) on up to `jobs` threads and returns the results in
// chunk order, so the merged outcome never depends on scheduling.
template <class Result, class Fn>
std::vector<Result> run_chunks(std::size_t chunks, int jobs, Fn fn) {
    std::vector<Result> out(chunks);
    const std::size_t workers = std::min<std::size_t>(chunks, jobs < 1 ? 1 : static_cast<std::size_t>(jobs));
    if (workers <= 1) {
        for (std::size_t i = 0; i < chunks; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(chunks);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < chunks;) {
                try {
                    out[i] = fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace delsub::detail
