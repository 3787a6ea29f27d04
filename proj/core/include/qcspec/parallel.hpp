#pragma once

#include <cstddef>
#include <functional>

namespace qcspec {

/// Worker count: QCSPEC_THREADS if set to a positive integer, else hardware concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, n) on up to `workers` threads. Exceptions from
/// body are rethrown (the one with the lowest index wins) after all workers join.
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& body);

}  // namespace qcspec
