#pragma once

#include <cstddef>
#include <functional>

namespace gridrel {

// Worker count from a CLI-style request: <= 0 means all available cores.
unsigned resolve_jobs(int requested);

// Runs fn(i) for every i in [0, count) on up to `jobs` threads. Items must be
// independent; the first exception thrown by any item is rethrown after all
// workers finish. jobs <= 1 runs inline.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn);

}  // namespace gridrel
