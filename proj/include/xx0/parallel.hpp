#pragma once

#include <cstddef>
#include <functional>

namespace xx0 {

/// Global worker cap for data-parallel loops. 0 = hardware concurrency.
/// Set from the CLI --threads flag or the XX0_THREADS environment variable.
void set_thread_cap(unsigned n);
unsigned thread_cap();

/// Runs fn(i) for i in [begin, end) on up to thread_cap() workers.
/// fn must only write to disjoint state per index.
void parallel_for(std::size_t begin, std::size_t end, const std::function<void(std::size_t)>& fn);

} // namespace xx0
