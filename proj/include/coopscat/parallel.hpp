#pragma once

#include <cstddef>
#include <functional>

namespace coopscat {

/// Worker count: `requested` if non-zero, else $COOPSCAT_THREADS, else the
/// hardware concurrency (at least 1).
unsigned resolve_threads(unsigned requested);

/// Calls body(i) for i in [0, count) on up to `threads` workers. The first
/// exception thrown by any task is rethrown after all workers join.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace coopscat
