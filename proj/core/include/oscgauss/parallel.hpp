#pragma once

#include <cstddef>
#include <functional>

namespace oscgauss {

/// Runs fn(0..count-1) on up to `jobs` threads. Each index is visited exactly
/// once; callers write results into pre-sized slots so output order never
/// depends on scheduling. The first exception thrown by any task is rethrown.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace oscgauss
