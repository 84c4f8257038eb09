#pragma once

#include <cstddef>
#include <functional>

namespace bgbench {

// Process-wide cap on worker threads. 0 means "use hardware concurrency".
// Set once from the CLI (--threads / BGBENCH_THREADS) before running commands.
void set_max_threads(int n);
int max_threads();

// Runs fn(i) for i in [0, count). Work is split by index, results must be
// written to per-index slots so the outcome is independent of scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace bgbench
