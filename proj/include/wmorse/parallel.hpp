#pragma once

#include <cstddef>
#include <functional>

namespace wmorse {

// Worker cap: WMORSE_THREADS environment variable; 0 or unset means one
// worker per hardware thread.
int worker_count();

// Runs fn(i) for i in [0, n).  Work items must be independent; results are
// written by index so the outcome does not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace wmorse
