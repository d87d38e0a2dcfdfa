#pragma once

#include <cstddef>
#include <functional>

namespace kschubert {

/// KSCHUBERT_THREADS if set to a positive integer, else the hardware count.
unsigned worker_count();

/// Runs fn(k) for k in [0, n) on up to worker_count() threads.  The first
/// exception thrown by a task is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace kschubert
