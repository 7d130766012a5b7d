#pragma once

#include <cstddef>
#include <functional>

namespace exmhd {

// Worker cap: EXMHD_THREADS if set (clamped to [1, hardware]), else the hardware
// concurrency. Read once.
int thread_count();

// Runs fn(0..count-1), splitting the index range over at most thread_count() workers.
// Tasks must be independent; results do not depend on the split (used only for loops
// over form components and similar disjoint work). Inline when one worker suffices.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace exmhd
