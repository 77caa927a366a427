#pragma once

#include <cstddef>
#include <functional>

namespace trendaudit {

// Worker count: TRENDAUDIT_THREADS caps it when set, otherwise the
// hardware concurrency. Always at least 1.
std::size_t thread_budget();

// Runs fn over [0, n) split into contiguous chunks, one per worker.
// threads == 0 means thread_budget(). fn must only write to disjoint,
// index-owned state; the first exception thrown by any chunk is rethrown
// after all workers joined.
void parallel_for_chunks(std::size_t n, std::size_t threads,
                         const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace trendaudit
