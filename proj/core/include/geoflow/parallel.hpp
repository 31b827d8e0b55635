#pragma once

#include <functional>

namespace geoflow {

// Thread cap: GEOFLOW_THREADS if set to a positive integer, otherwise the
// hardware concurrency.
int max_threads();

// Runs fn(0..n-1) on up to max_threads() workers. The first exception thrown
// by any task is rethrown after all workers join.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace geoflow
