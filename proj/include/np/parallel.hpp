#pragma once

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace np {

// Data-parallel kernels. Every call site writes each output slot from its
// index alone, so the parallel and serial paths produce identical bytes;
// tests compare them bit for bit.

template <class Fn>
void serial_for(std::size_t n, Fn&& fn) {
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
#ifdef _OPENMP
  if (n >= 256) {
    const long long nn = static_cast<long long>(n);
    // Interleaved chunks: per-index cost is often monotone in the index
    // (bisection depth grows toward alpha = 0), contiguous halves stall.
#pragma omp parallel for schedule(static, 64)
    for (long long i = 0; i < nn; ++i) fn(static_cast<std::size_t>(i));
    return;
  }
#endif
  serial_for(n, fn);
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Evaluates `f` at `grid` equispaced points of [0,1] (endpoints included).
template <class Fn>
std::vector<double> sample_unit_grid(const Fn& f, std::size_t grid) {
  std::vector<double> out(grid);
  const double step = 1.0 / static_cast<double>(grid - 1);
  parallel_for(grid, [&](std::size_t i) { out[i] = f(static_cast<double>(i) * step); });
  return out;
}

template <class Fn>
std::vector<double> sample_unit_grid_serial(const Fn& f, std::size_t grid) {
  std::vector<double> out(grid);
  const double step = 1.0 / static_cast<double>(grid - 1);
  serial_for(grid, [&](std::size_t i) { out[i] = f(static_cast<double>(i) * step); });
  return out;
}

}  // namespace np
