#pragma once

#include <functional>

#include "hsu/types.hpp"

namespace hsu {

/// Width of parallel regions: HSU_THREADS when set and nonzero, otherwise the
/// hardware concurrency.
unsigned thread_budget();

/// Calls body(begin, end) over contiguous chunks of [0, count). Chunks are
/// disjoint, so results are independent of the schedule.
void parallel_for(Index count, const std::function<void(Index, Index)>& body,
                  unsigned threads = thread_budget());

}  // namespace hsu
