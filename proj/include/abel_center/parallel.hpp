#pragma once

#include <cstddef>
#include <functional>

namespace abel_center {

/// Worker cap: ABEL_CENTER_THREADS if set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
std::size_t thread_budget();

/// Runs body(i) for i in [0, count) on up to thread_budget() threads.
/// Exceptions thrown by any body are rethrown (the first one wins).
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace abel_center
