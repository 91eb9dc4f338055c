#pragma once

#include <cstdint>
#include <functional>

namespace pprfcn {

/// Worker count for data-parallel loops: hardware concurrency, capped by the
/// PPRFCN_THREADS environment variable when set.
int worker_count();

/// Runs fn(begin, end) over a partition of [0, n) on `workers` threads
/// (worker_count() by default). Falls back to a plain call for small n.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& fn,
                  int workers = 0);

}  // namespace pprfcn
