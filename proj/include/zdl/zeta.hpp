#pragma once

// Riemann zeta: Euler-Maclaurin reference values (pointwise and over grids),
// the approximate functional equations, zeta'/zeta, the smoothed von
// Mangoldt identity and the Perron-integral checks.

#include <cstdint>
#include <memory>
#include <vector>

#include "zdl/eval.hpp"
#include "zdl/gamma.hpp"

namespace zdl {

inline constexpr std::int64_t kMaxEulerMaclaurinCutoff = 20'000'000;
inline constexpr double kMaxZetaHeight = 1e7;

// Euler-Maclaurin cutoff max(30, ceil(1.3 |t|)); capacity error above the cap.
std::int64_t em_cutoff(double t);

// Split logarithms of 0..N (entry 0 unused), shared and immutable.
std::shared_ptr<const std::vector<SplitLog>> split_log_table(std::int64_t N);

Complex zeta_reference(Complex s);
// zeta(sigma + i t_k) over a grid through the rotation kernel.
std::vector<Complex> zeta_grid(double sigma, const GridSpec& grid);
// (zeta(s), zeta'(s)) by the same Euler-Maclaurin sum.
std::pair<Complex, Complex> zeta_and_derivative(Complex s);

struct AfeResult {
  Complex value;
  double x_cut = 0.0;
  double y_cut = 0.0;
  double error_budget = 0.0;
  Complex main_sum;  // sum_{n<=x} n^{-s}
  Complex dual_sum;  // sum_{n<=y} n^{s-1}
  Complex chi;
};

AfeResult zeta_afe(Complex s);
Complex zeta_afe_long(Complex s, double T);

// Below this |zeta(s)| the logarithmic derivative is refused.
inline constexpr double kLogDerivFloor = 1e-8;
Complex log_deriv_zeta(Complex s);

double smoothed_mangoldt_residual(Complex s, double Y, double T);

struct PerronResult {
  double deviation = 0.0;
  Complex integral;        // (1/2 pi i) int ... ds
  Complex pole_term;
  Complex direct;          // zeta_sum over (A, B]
  double resolution_change = 0.0;
  double step = 0.0;       // panel width of the accepted evaluation
};

PerronResult perron_check(double sigma, double t, double T, double A, double B);

// int_{-T}^{T} 1_{|t+u| > window} |zeta(sigma + 1/log T + i(t+u))| du/(|u| + 1/log T)
double majorant_integral(double sigma, double t, double T, double window = 10.0);

}  // namespace zdl
