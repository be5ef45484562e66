#include "zdl/kernels.hpp"

#include <atomic>

namespace zdl::kernels {

namespace {

std::atomic<int> g_workers{0};

constexpr std::size_t kTile = 512;
constexpr std::size_t kLanes = 8;
constexpr std::size_t kSweep = 4;

}  // namespace

void set_workers(int w) { g_workers.store(w < 0 ? 0 : w); }

int workers() { return g_workers.load(); }

std::int64_t rebuild_period(double abs_sum) {
  std::int64_t period = 1024;
  while (period > 32 && abs_sum * static_cast<double>(period) * 4.4e-16 > 2e-10)
    period /= 2;
  return period;
}

void exact_state(const BlockTerms& terms, double t, std::span<double> re,
                 std::span<double> im) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const double ph = reduced_phase(t, terms.log_n[i]);
    re[i] = terms.amp[i] * std::cos(ph);
    im[i] = -terms.amp[i] * std::sin(ph);
  }
}

void rotate_sum(const BlockTerms& terms, const GridSpec& grid,
                std::span<Complex> out,
                const std::function<std::size_t(double)>& active_terms) {
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
    std::vector<double> acc_re(static_cast<std::size_t>(period));
    std::vector<double> acc_im(static_cast<std::size_t>(period));
    std::vector<double> re(kTile), im(kTile);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::int64_t k0 = c * period;
      const std::int64_t k1 = std::min(grid.count, k0 + period);
      const auto len = static_cast<std::size_t>(k1 - k0);
      std::size_t used = n;
      if (active_terms) {
        const double tmax = std::max(std::abs(grid.at(k0)), std::abs(grid.at(k1 - 1)));
        used = std::min(n, active_terms(tmax));
      }
      std::fill(acc_re.begin(), acc_re.end(), 0.0);
      std::fill(acc_im.begin(), acc_im.end(), 0.0);
      const auto [t_start, t_start_lo] = grid.at_split(k0);
      for (std::size_t base = 0; base < used; base += kTile) {
        const std::size_t m = std::min(kTile, used - base);
        for (std::size_t j = 0; j < m; ++j) {
          const double ph = reduced_phase(t_start, t_start_lo, terms.log_n[base + j]);
          re[j] = terms.amp[base + j] * std::cos(ph);
          im[j] = -terms.amp[base + j] * std::sin(ph);
        }
        double* __restrict r = re.data();
        double* __restrict q = im.data();
        const double* __restrict a = wr.data() + base;
        const double* __restrict b = wi.data() + base;
        const std::size_t body = m - m % kLanes;
        std::size_t k = 0;
        // kSweep grid points per pass: one load/store of the state per group
        for (; k + kSweep <= len; k += kSweep) {
          alignas(64) double sr[kSweep][kLanes] = {}, si[kSweep][kLanes] = {};
          for (std::size_t j = 0; j < body; j += kLanes) {
#pragma omp simd
            for (std::size_t l = 0; l < kLanes; ++l) {
              double x = r[j + l], y = q[j + l];
              const double c = a[j + l], d = b[j + l];
              for (std::size_t p = 0; p < kSweep; ++p) {
                sr[p][l] += x;
                si[p][l] += y;
                const double nx = x * c - y * d;
                y = x * d + y * c;
                x = nx;
              }
              r[j + l] = x;
              q[j + l] = y;
            }
          }
          double tr[kSweep] = {}, ti[kSweep] = {};
          for (std::size_t j = body; j < m; ++j) {
            double x = r[j], y = q[j];
            for (std::size_t p = 0; p < kSweep; ++p) {
              tr[p] += x;
              ti[p] += y;
              const double nx = x * a[j] - y * b[j];
              y = x * b[j] + y * a[j];
              x = nx;
            }
            r[j] = x;
            q[j] = y;
          }
          for (std::size_t p = 0; p < kSweep; ++p) {
            for (std::size_t l = 0; l < kLanes; ++l) {
              tr[p] += sr[p][l];
              ti[p] += si[p][l];
            }
            acc_re[k + p] += tr[p];
            acc_im[k + p] += ti[p];
          }
        }
        for (; k < len; ++k) {
          double tr = 0.0, ti = 0.0;
          for (std::size_t j = 0; j < m; ++j) {
            const double x = r[j], y = q[j];
            tr += x;
            ti += y;
            r[j] = x * a[j] - y * b[j];
            q[j] = x * b[j] + y * a[j];
          }
          acc_re[k] += tr;
          acc_im[k] += ti;
        }
      }
      for (std::size_t k = 0; k < len; ++k)
        out[static_cast<std::size_t>(k0) + k] = Complex(acc_re[k], acc_im[k]);
    }
  }
}

}  // namespace zdl::kernels
