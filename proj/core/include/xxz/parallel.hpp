#pragma once

#include <cstddef>
#include <functional>

namespace xxz {

/// Worker count: XXZQL_THREADS if set and positive, else hardware concurrency.
int thread_count();

/// Runs body(i) for i in [0, count). Iterations must write disjoint data.
/// The first exception thrown by any iteration is rethrown on the caller.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace xxz
