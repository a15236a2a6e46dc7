#pragma once

#include <cstdint>
#include <functional>

namespace fermidec {

// FERMIDEC_THREADS when set to a positive integer, otherwise hardware concurrency.
unsigned thread_count();

// Runs fn(0) ... fn(n-1), possibly concurrently; fn must be safe to call in
// parallel for distinct indices. The first exception thrown is rethrown after
// all workers stop.
void parallel_for(std::uint64_t n, const std::function<void(std::uint64_t)>& fn);

}  // namespace fermidec
