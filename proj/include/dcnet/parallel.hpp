#pragma once

#include <cstddef>
#include <functional>

namespace dcnet {

// Worker count: DCNET_THREADS when set (minimum 1), else hardware concurrency.
int thread_budget();

// Run fn(0..n-1) across the thread budget. Falls back to a plain loop for
// small n or a budget of one. fn must write only to its own slot.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace dcnet
