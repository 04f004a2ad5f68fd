#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace wildgoppa {

/// fn(0), .., fn(count - 1) on up to `jobs` threads. Results come back in index
/// order; the first exception by index is rethrown after all workers finish.
template <typename Fn>
auto parallel_map(std::size_t count, unsigned jobs, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
    using T = decltype(fn(std::size_t{}));
    std::vector<std::optional<T>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < count;) {
            try {
                slots[i].emplace(fn(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < n; ++k) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    std::vector<T> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

/// --jobs value if positive, else GOPPA_JOBS, else the hardware thread count.
unsigned resolve_jobs(int requested);

}  // namespace wildgoppa
