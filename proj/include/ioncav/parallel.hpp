#pragma once

#include <cstddef>
#include <functional>

namespace ioncav {

/// Worker count: IONCAV_WORKERS when set to a positive integer, otherwise
/// the hardware concurrency.
int worker_count();

/// Runs body(i) for i in [0, n) on up to `workers` threads (0 = worker_count()).
/// Items are claimed dynamically; callers write results by index so the
/// outcome does not depend on scheduling. The first exception thrown by any
/// item is rethrown after all threads join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, int workers = 0);

}  // namespace ioncav
