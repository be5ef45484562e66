// Parallel kernels against the serial per-point reference.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "zdl/kernels.hpp"
#include "zdl/large_values.hpp"
#include "zdl/reference.hpp"

namespace {

template <class F>
double seconds(F&& f, int repeat = 1) {
  double best = 1e300;
  for (int i = 0; i < repeat; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bench_kernels"};
  double N = 2000, points = 20000, T = 1e3, dt = 0.05;
  int workers = 0, repeat = 3;
  app.add_option("--block-length", N, "terms in the grid_eval block");
  app.add_option("--points", points, "grid points for grid_eval");
  app.add_option("--T", T, "height for the theorem-LHS scan");
  app.add_option("--dt", dt, "grid step for the theorem-LHS scan");
  app.add_option("--workers", workers, "threads (0 = OpenMP default)");
  app.add_option("--repeat", repeat, "kernel timings keep the best of this many runs");
  CLI11_PARSE(app, argc, argv);
  zdl::kernels::set_workers(workers);

  using namespace zdl;
  const auto block = DirichletBlock::unit(N, 2 * N, 0.5);
  const GridSpec grid{1000.0, 0.01, static_cast<std::int64_t>(points)};
  std::vector<Complex> fast, slow;
  const double tf = seconds([&] { fast = grid_eval(block, grid); }, repeat);
  const double ts = seconds([&] { slow = reference::grid_eval(block, grid); });
  double dev = 0.0;
  for (std::size_t i = 0; i < fast.size(); ++i) dev = std::max(dev, std::abs(fast[i] - slow[i]));
  std::printf("grid_eval        N=%g points=%g  kernel %.3fs  reference %.3fs  speedup %.1fx  max dev %.2e\n",
              N, points, tf, ts, ts / tf, dev);

  ScanConfig cfg = ScanConfig::over(T, dt);
  cfg.nu = 0.4;
  cfg.eps = 0.25;
  std::vector<char> mf, ms;
  const double lf = seconds([&] { mf = theorem_lhs_marks(cfg); }, repeat);
  const double ls = seconds([&] { ms = reference::theorem_lhs_marks(0.4, 0.25, T, cfg.grid); });
  std::size_t diff = 0;
  for (std::size_t i = 0; i < mf.size(); ++i) diff += mf[i] != ms[i];
  std::printf("theorem_lhs scan T=%g points=%lld  kernel %.3fs  reference %.3fs  speedup %.1fx  mark mismatches %zu\n",
              T, static_cast<long long>(cfg.grid.count), lf, ls, ls / lf, diff);
  return 0;
}
