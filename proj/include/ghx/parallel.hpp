#pragma once

#include <cstddef>
#include <functional>

namespace ghx {

/// Number of worker threads to use. Reads GHX_THREADS (clamped to [1, 256]);
/// falls back to the hardware concurrency when unset or unparsable.
int thread_budget();

/// Runs body(i) for i in [0, count) on the thread budget. Each index is
/// processed exactly once; results must be written to preallocated
/// per-index slots so output does not depend on scheduling. Exceptions are
/// captured and the first one (by index) is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace ghx
