#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace cocycle {

// Worker count from COCYCLE_FORGE_THREADS, else hardware concurrency.
int thread_count();

// Runs body(i) for i in [0, count) on thread_count() workers. Each index is
// handled exactly once; callers write to per-index slots.
void parallel_for(size_t count, const std::function<void(size_t)>& body);

// Pairwise summation with a fixed tree, independent of thread count.
double pairwise_sum(const double* values, size_t count);
inline double pairwise_sum(const std::vector<double>& v) { return pairwise_sum(v.data(), v.size()); }

}  // namespace cocycle
