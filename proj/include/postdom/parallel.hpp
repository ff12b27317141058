#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace postdom {

// Evaluates fn(0..count-1) on up to `threads` workers. Results are stored by
// index, so the output does not depend on scheduling. If any call throws, the
// exception from the lowest failing index is rethrown.
template <class F>
auto parallel_map(std::size_t count, std::size_t threads, F&& fn) -> std::vector<decltype(fn(std::size_t{}))> {
    using T = decltype(fn(std::size_t{}));
    std::vector<T> results(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                results[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return results;
}

}  // namespace postdom
