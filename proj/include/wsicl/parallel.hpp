#pragma once

#include <cstddef>
#include <functional>

namespace wsicl {

// Worker count for data-parallel loops, resolved once from WSICL_NUM_WORKERS.
// 0 or unset means fully serial. Parallel execution is deterministic by
// construction: indices are statically partitioned and every output element
// is written by exactly one worker with a fixed sequential accumulation
// order, so results are bit-identical for any worker count.
int num_workers();

/// Runs fn(i) for i in [0, n), split across workers.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

/// Runs fn(begin, end) on contiguous chunks; cheaper when fn has per-chunk setup.
void parallel_for_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace wsicl
