#pragma once

#include <cstddef>
#include <functional>

namespace ssrl {

/// Worker cap used by every data-parallel loop in the library. Defaults to
/// SSRL_NUM_THREADS when set, else the hardware concurrency.
int thread_count();
void set_thread_count(int n);

/// Runs body(i) for i in [0, n). Items must write disjoint outputs; callers
/// reduce results afterwards in index order so the outcome never depends on
/// the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace ssrl
