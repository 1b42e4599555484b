#pragma once
// Minimal index-space parallelism. VOA_THREADS bounds the worker count;
// unset or 1 means serial execution. All uses split read-only work over
// immutable inputs with per-index output slots, so no locking is needed
// beyond the join.

#include <functional>

namespace voa {

int max_threads();

// Runs fn(0..n-1), possibly concurrently.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace voa
