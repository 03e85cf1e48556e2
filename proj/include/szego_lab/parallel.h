#pragma once

#include <cstddef>
#include <functional>

namespace szego {

/// Worker count: SZEGO_LAB_THREADS when set to a positive integer, otherwise
/// the hardware concurrency.
std::size_t worker_count();

/// Runs body(i) for i in [0, n). Callers write results into slot i so the
/// schedule never changes output. If any call throws, the exception from the
/// lowest failing index is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace szego
