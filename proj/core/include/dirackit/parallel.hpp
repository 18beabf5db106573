#pragma once

#include <cstddef>
#include <functional>

namespace dirackit {

/// Worker count: DIRACKIT_THREADS when set to a positive integer, else hardware concurrency.
std::size_t thread_count();

/// Runs body(i) for i in [0, n). Each index is handled exactly once; callers write results
/// into per-index slots, so the outcome does not depend on scheduling. The first exception
/// thrown by any body (lowest index) is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace dirackit
