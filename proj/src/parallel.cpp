#include "satlab/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef SATLAB_HAS_OPENMP
#include <omp.h>
#endif

namespace satlab {

int thread_budget() {
#ifdef SATLAB_HAS_OPENMP
  int budget = omp_get_max_threads();
  if (const char* env = std::getenv("SATLAB_THREADS")) {
    try {
      budget = std::stoi(env);
    } catch (const std::exception&) {
      budget = omp_get_max_threads();
    }
  }
  return budget < 1 ? 1 : budget;
#else
  return 1;
#endif
}

namespace detail {

void run_indexed(std::int64_t n, void (*trampoline)(void*, std::int64_t), void* ctx,
                 bool parallel) {
#ifdef SATLAB_HAS_OPENMP
  if (parallel && n > 1) {
    const int threads = thread_budget();
#pragma omp parallel for schedule(static) num_threads(threads)
    for (std::int64_t i = 0; i < n; ++i) trampoline(ctx, i);
    return;
  }
#else
  (void)parallel;
#endif
  for (std::int64_t i = 0; i < n; ++i) trampoline(ctx, i);
}

}  // namespace detail

namespace {

constexpr std::size_t kBlock = 2048;

template <class T>
T block_sum_impl(const std::vector<T>& values) {
  T total{};
  for (std::size_t begin = 0; begin < values.size(); begin += kBlock) {
    const std::size_t end = std::min(begin + kBlock, values.size());
    T partial{};
    for (std::size_t i = begin; i < end; ++i) partial += values[i];
    total += partial;
  }
  return total;
}

}  // namespace

double block_sum(const std::vector<double>& values) { return block_sum_impl(values); }
Complex block_sum(const std::vector<Complex>& values) { return block_sum_impl(values); }

}  // namespace satlab
