#pragma once

#include <cstddef>
#include <functional>

namespace polyface {

/// Worker count: POLYFACE_THREADS if set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
std::size_t thread_count();

/// Runs body(i) for i in [0, n). Work is split into contiguous blocks, one per
/// worker. Calls made from inside a running parallel_for execute serially, so
/// nested use never oversubscribes. Results must not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace polyface
