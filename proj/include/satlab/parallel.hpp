#pragma once

#include <cstdint>
#include <vector>

#include "satlab/types.hpp"

namespace satlab {

// Number of worker threads: SATLAB_THREADS if set (clamped to >= 1), otherwise
// the OpenMP default. 1 when built without OpenMP.
int thread_budget();

namespace detail {
void run_indexed(std::int64_t n, void (*trampoline)(void*, std::int64_t), void* ctx,
                 bool parallel);
}

// Apply body(i) for i in [0, n). Iterations must be independent; each writes
// only its own slice of any shared output.
template <class F>
void for_range(std::int64_t n, F&& body) {
  auto call = [](void* ctx, std::int64_t i) { (*static_cast<F*>(ctx))(i); };
  detail::run_indexed(n, call, &body, true);
}

// Serial reference with identical semantics, kept for tests and benchmarks.
template <class F>
void for_range_serial(std::int64_t n, F&& body) {
  auto call = [](void* ctx, std::int64_t i) { (*static_cast<F*>(ctx))(i); };
  detail::run_indexed(n, call, &body, false);
}

// Fixed-block summation: values are summed serially inside 2048-element blocks
// and the block partials are added in block order. The grouping is independent
// of the thread count, so totals are bit-identical however the blocks were
// filled. Parallel callers fill `values` by index and then reduce here.
double block_sum(const std::vector<double>& values);
Complex block_sum(const std::vector<Complex>& values);

}  // namespace satlab
