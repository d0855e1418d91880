#pragma once

#include <cstddef>
#include <functional>

namespace fmd {

/// Worker count for data-parallel loops: FMD_WORKERS if set (>= 1),
/// otherwise the hardware concurrency.
int worker_count();

/// Runs fn(i) for i in [0, n) on up to `workers` threads (0 = default).
/// Iterations must write only to disjoint state; results are then
/// independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, int workers = 0);

} // namespace fmd
