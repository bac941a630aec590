#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qtm {

// Threads actually used for `requested` (0 = all hardware threads).
inline int resolve_threads(int requested) {
#ifdef _OPENMP
  int hw = omp_get_max_threads();
  if (requested <= 0) return hw;
  return std::min(requested, hw);
#else
  (void)requested;
  return 1;
#endif
}

// Chunked parallel loop over [0, n). fn(begin, end) must not touch state
// outside its chunk unless the access is atomic.
template <class Fn>
void parallel_for(std::int64_t n, int threads, Fn&& fn) {
  threads = resolve_threads(threads);
  if (n <= 0) return;
#ifdef _OPENMP
  if (threads > 1) {
    std::int64_t chunks = std::min<std::int64_t>(threads * 8, n);
    std::int64_t step = (n + chunks - 1) / chunks;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t c = 0; c < chunks; ++c) {
      std::int64_t b = c * step;
      std::int64_t e = std::min(n, b + step);
      if (b < e) fn(b, e);
    }
    return;
  }
#endif
  fn(std::int64_t{0}, n);
}

}  // namespace qtm
