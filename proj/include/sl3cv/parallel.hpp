#pragma once
// Index-space parallel loop: OpenMP when requested and available, otherwise
// the serial reference path. Callers write results into index-addressed
// slots, so both paths produce identical output; the suites' tests and the
// benchmark rely on that equivalence.

#include <cstddef>

namespace sl3cv {

template <class Fn>
void parallel_for(std::size_t n, bool parallel, Fn&& fn) {
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      fn(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)parallel;
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace sl3cv
