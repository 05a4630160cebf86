#pragma once

#include <cstddef>
#include <functional>

namespace qens {

unsigned default_thread_count();

// Runs body(0..count-1) over a work queue of `threads` workers. Results must
// be written to disjoint slots; the first exception thrown by any worker is
// rethrown after all workers join.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace qens
