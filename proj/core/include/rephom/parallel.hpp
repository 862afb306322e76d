#pragma once

#include <cstddef>
#include <functional>

namespace rephom {

// Worker count from REPHOM_THREADS, else hardware concurrency (at least 1).
std::size_t thread_count();

// Runs body(i) for i in [0, n). Exceptions from workers are rethrown on the
// calling thread (first one wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace rephom
