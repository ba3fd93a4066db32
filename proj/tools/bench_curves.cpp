// Compares the OpenMP and serial paths of the sampling/quadrature kernels.
// Usage: bench_curves [grid]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "np/distributions.hpp"
#include "np/lower_bounds.hpp"
#include "np/parallel.hpp"
#include "np/upper_bounds.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <class Fn>
double time_ms(const Fn& fn) {
  const auto t0 = Clock::now();
  fn();
  const auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

volatile double g_sink = 0.0;

void report(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %.2fx\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t grid = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 200001;
  std::printf("threads: %d, grid: %zu\n", np::max_threads(), grid);

  const auto kl_curve = np::named_lower_curve(np::LowerKind::Kl, {.value = 0.5});
  report("kl lower curve", time_ms([&] {
           auto v = np::sample_unit_grid_serial(kl_curve.eval, grid);
           g_sink = v[grid / 2];
         }),
         time_ms([&] {
           auto v = np::sample_unit_grid(kl_curve.eval, grid);
           g_sink = v[grid / 2];
         }));

  const auto alpha_curve = np::named_lower_curve(np::LowerKind::Alpha, {.value = 0.9, .q = 0.3});
  report("alpha lower curve", time_ms([&] {
           auto v = np::sample_unit_grid_serial(alpha_curve.eval, grid);
           g_sink = v[grid / 2];
         }),
         time_ms([&] {
           auto v = np::sample_unit_grid(alpha_curve.eval, grid);
           g_sink = v[grid / 2];
         }));

  const np::AnalyticFamily p = np::gaussian_family(0.0, 1.0);
  const np::AnalyticFamily q = np::gaussian_family(0.0, 2.0);
  const np::GridSpec window{-20.0, 20.0, 1000000};
  {
    // Same per-cell kernel, serial loop vs the parallel_for inside
    // discretize_analytic.
    const auto serial = time_ms([&] {
      const double h = (window.upper - window.lower) / static_cast<double>(window.nodes);
      std::vector<double> pm(window.nodes), qm(window.nodes);
      np::serial_for(window.nodes, [&](std::size_t i) {
        const double left = window.lower + static_cast<double>(i) * h;
        const double right = window.lower + static_cast<double>(i + 1) * h;
        pm[i] = p.cdf(right) - p.cdf(left);
        qm[i] = q.cdf(right) - q.cdf(left);
      });
      g_sink = pm[window.nodes / 2] + qm[window.nodes / 2];
    });
    const auto parallel = time_ms([&] {
      auto d = np::discretize_analytic(p, q, window);
      g_sink = d.pair.p[0];
    });
    report("1e6-cell discretization", serial, parallel);
  }

  return 0;
}
