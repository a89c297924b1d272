#pragma once

#include <cstdint>
#include <functional>

namespace cognet {

// Thread count from COGNET_THREADS, else hardware concurrency (at least 1).
int default_thread_count();

// Calls body(i) for i in [0, n) on up to `threads` workers. Each index runs
// exactly once; callers write results into per-index slots so the outcome
// does not depend on the thread count. The first exception is rethrown.
void parallel_for(std::int64_t n, int threads, const std::function<void(std::int64_t)>& body);

}  // namespace cognet
