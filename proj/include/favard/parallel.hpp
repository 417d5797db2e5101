#pragma once

#include <cstdint>
#include <functional>
#include <span>

namespace favard::parallel {

// Effective worker count: set_thread_count value, else FAVARD_THREADS, else
// hardware concurrency.
int thread_count();

// 0 restores the automatic default.
void set_thread_count(int threads);

// Runs body(i) for i in [0, count). Bodies must be independent; work is
// handed out in dynamic chunks, so side effects must go to per-index slots.
void for_range(std::int64_t count, const std::function<void(std::int64_t)>& body);

// Fixed-tree pairwise summation; the result depends only on the contents,
// not on the thread count that produced them.
double pairwise_sum(std::span<const double> values);

}  // namespace favard::parallel
