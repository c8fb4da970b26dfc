#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vigil::par {

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Data-parallel loop over [0, n). f(i) must touch only state owned by
// iteration i so the result is identical for any thread count (including the
// serial build). Static schedule keeps the work split deterministic.
template <typename F>
inline void parallel_for(std::size_t n, F&& f) {
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) f(static_cast<std::size_t>(i));
#else
  for (std::ptrdiff_t i = 0; i < count; ++i) f(static_cast<std::size_t>(i));
#endif
}

}  // namespace vigil::par
