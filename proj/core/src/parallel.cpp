#include "fermidec/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fermidec {

unsigned thread_count() {
    if (const char* env = std::getenv("FERMIDEC_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) return static_cast<unsigned>(std::min(v, 256L));
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? hc : 1;
}

void parallel_for(std::uint64_t n, const std::function<void(std::uint64_t)>& fn) {
    if (n == 0) return;
    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(thread_count(), n));
    if (workers <= 1) {
        for (std::uint64_t i = 0; i < n; ++i) fn(i);
        return;
    }

    std::atomic<std::uint64_t> cursor{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                std::uint64_t i;
                while (!failed.load(std::memory_order_relaxed) &&
                       (i = cursor.fetch_add(1, std::memory_order_relaxed)) < n) {
                    try {
                        fn(i);
                    } catch (...) {
                        const std::scoped_lock lock(error_mutex);
                        if (!first_error) first_error = std::current_exception();
                        failed.store(true, std::memory_order_relaxed);
                    }
                }
            });
        }
    }

    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace fermidec
