#pragma once

// OpenMP multi-evaluation kernels.  Each grid chunk rebuilds the per-term
// state e^{-i t log n} from exact phases at its first point and then
// advances by the fixed rotation e^{-i dt log n}; chunk boundaries do not
// depend on the thread count, so results are identical for any number of
// workers.  zdl::reference holds the per-point serial versions these are
// tested against.

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "zdl/eval.hpp"

namespace zdl::kernels {

// Number of rotation steps between exact rebuilds for a block whose
// amplitudes sum to abs_sum: 1024 unless the accumulated drift would
// exceed ~2e-10 absolute.
std::int64_t rebuild_period(double abs_sum);

// Number of worker threads used by the kernels (0 = OpenMP default).
void set_workers(int workers);
int workers();

// out[k] = sum_i amp_i e^{-i t_k log n_i}.  When active_terms is set it maps
// the largest |t| of a chunk to the number of leading terms used there.
void rotate_sum(const BlockTerms& terms, const GridSpec& grid,
                std::span<Complex> out,
                const std::function<std::size_t(double)>& active_terms = {});

// Exact per-term state at ordinate t, split into real and imaginary parts.
void exact_state(const BlockTerms& terms, double t, std::span<double> re,
                 std::span<double> im);

// Calls visit(k, re, im) for every grid point k with the individual terms
// amp_i e^{-i t_k log n_i}.  visit must be thread-safe and must not throw.
template <class Visitor>
void scan_terms(const BlockTerms& terms, const GridSpec& grid, Visitor&& visit) {
  const std::size_t n = terms.size();
  const std::int64_t period = rebuild_period(terms.abs_sum());
  const std::int64_t chunks = (grid.count + period - 1) / period;
  std::vector<double> wr(n), wi(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double ph = reduced_phase(grid.dt, terms.log_n[i]);
    wr[i] = std::cos(ph);
    wi[i] = -std::sin(ph);
  }
  const int nthreads = workers();
#pragma omp parallel num_threads(nthreads > 0 ? nthreads : omp_get_max_threads())
  {
    std::vector<double> re(n), im(n);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::int64_t k0 = c * period;
      const std::int64_t k1 = std::min(grid.count, k0 + period);
      exact_state(terms, grid.at(k0), re, im);
      for (std::int64_t k = k0; k < k1; ++k) {
        visit(k, std::span<const double>(re), std::span<const double>(im));
        double* __restrict r = re.data();
        double* __restrict q = im.data();
        const double* __restrict a = wr.data();
        const double* __restrict b = wi.data();
#pragma omp simd
        for (std::size_t i = 0; i < n; ++i) {
          const double nr = r[i] * a[i] - q[i] * b[i];
          const double ni = r[i] * b[i] + q[i] * a[i];
          r[i] = nr;
          q[i] = ni;
        }
      }
    }
  }
}

}  // namespace zdl::kernels
