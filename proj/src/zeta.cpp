#include "zdl/zeta.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include "zdl/kernels.hpp"
#include "zdl/quadrature.hpp"

namespace zdl {

namespace {

constexpr double kPi = std::numbers::pi;

// B_{2k} / (2k)!, k = 1..7.
constexpr std::array<double, 7> kBernoulli = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

void check_s(Complex s, const char* who) {
  require(std::isfinite(s.real()) && std::isfinite(s.imag()), ErrorKind::input_domain,
          std::string(who) + ": non-finite argument");
  require(!(s.real() == 1.0 && s.imag() == 0.0), ErrorKind::pole,
          std::string(who) + ": pole at s = 1");
  require(s.real() >= -1.0, ErrorKind::domain, std::string(who) + ": requires Re s >= -1");
  require(std::abs(s.imag()) <= kMaxZetaHeight, ErrorKind::domain,
          std::string(who) + ": requires |Im s| <= 1e7");
}

// n^{-s} for the tail terms.
Complex power_minus(const SplitLog& l, Complex s) {
  const double mag = std::exp(-s.real() * (l.hi + l.lo));
  const double ph = reduced_phase(s.imag(), l);
  return {mag * std::cos(ph), -mag * std::sin(ph)};
}

// Euler-Maclaurin remainder beyond the partial sum over n < N, and its
// s-derivative when wanted.
std::pair<Complex, Complex> em_tail(Complex s, std::int64_t N, const SplitLog& lN,
                                    bool derivative) {
  const double logN = lN.hi + lN.lo;
  const double dN = static_cast<double>(N);
  const Complex Ns = power_minus(lN, s);  // N^{-s}
  const Complex N1s = Ns * dN;             // N^{1-s}
  Complex v = N1s / (s - 1.0) + 0.5 * Ns;
  Complex d{};
  if (derivative)
    d = -logN * N1s / (s - 1.0) - N1s / ((s - 1.0) * (s - 1.0)) - 0.5 * logN * Ns;
  // P_k(s) = s (s+1) ... (s+2k-2), with derivative.
  Complex P = s;
  Complex dP = 1.0;
  Complex Npow = Ns / dN;  // N^{-s-1}
  for (std::size_t k = 0; k < kBernoulli.size(); ++k) {
    if (k > 0) {
      for (int j : {2 * static_cast<int>(k) - 1, 2 * static_cast<int>(k)}) {
        dP = dP * (s + static_cast<double>(j)) + P;
        P *= s + static_cast<double>(j);
      }
      Npow /= dN * dN;
    }
    v += kBernoulli[k] * P * Npow;
    if (derivative) d += kBernoulli[k] * Npow * (dP - logN * P);
  }
  return {v, d};
}

// e^z - 1 without cancellation for small |z|.
Complex cexpm1(Complex z) {
  const double y = z.imag();
  const double sh = std::sin(0.5 * y);
  const Complex eiy_m1(-2.0 * sh * sh, std::sin(y));
  return std::expm1(z.real()) * std::exp(Complex(0.0, y)) + eiy_m1;
}

}  // namespace

std::int64_t em_cutoff(double t) {
  const double n = std::max(30.0, std::ceil(1.3 * std::abs(t)));
  require(n <= static_cast<double>(kMaxEulerMaclaurinCutoff), ErrorKind::capacity,
          "zeta: Euler-Maclaurin cutoff exceeds limit 2e7 (|t| = " + fmt(t) + ")");
  return static_cast<std::int64_t>(n);
}

std::shared_ptr<const std::vector<SplitLog>> split_log_table(std::int64_t N) {
  static std::mutex mu;
  static std::shared_ptr<const std::vector<SplitLog>> table;
  std::lock_guard<std::mutex> lock(mu);
  if (!table || static_cast<std::int64_t>(table->size()) <= N) {
    // Grow geometrically so repeated requests stay cheap.
    std::int64_t size = std::max<std::int64_t>(N + 1, 1024);
    if (table) size = std::max<std::int64_t>(size, 2 * static_cast<std::int64_t>(table->size()));
    size = std::min<std::int64_t>(size, std::max<std::int64_t>(N + 1, kMaxEulerMaclaurinCutoff + 1));
    auto t = std::make_shared<std::vector<SplitLog>>(static_cast<std::size_t>(size));
    const std::int64_t start = table ? static_cast<std::int64_t>(table->size()) : 1;
    if (table) std::copy(table->begin(), table->end(), t->begin());
#pragma omp parallel for schedule(static)
    for (std::int64_t n = start; n < size; ++n) (*t)[static_cast<std::size_t>(n)] = split_log(n);
    table = std::move(t);
  }
  return table;
}

std::pair<Complex, Complex> zeta_and_derivative(Complex s) {
  check_s(s, "zeta");
  const std::int64_t N = em_cutoff(s.imag());
  const auto logs = split_log_table(N);
  double re = 0.0, im = 0.0, dre = 0.0, dim = 0.0;
  for (std::int64_t n = 1; n < N; ++n) {
    const SplitLog& l = (*logs)[static_cast<std::size_t>(n)];
    const double a = std::exp(-s.real() * l.hi);
    const double ph = reduced_phase(s.imag(), l);
    const double c = a * std::cos(ph);
    const double sn = -a * std::sin(ph);
    re += c;
    im += sn;
    dre -= l.hi * c;
    dim -= l.hi * sn;
  }
  const auto [tail, dtail] = em_tail(s, N, (*logs)[static_cast<std::size_t>(N)], true);
  return {Complex(re, im) + tail, Complex(dre, dim) + dtail};
}

Complex zeta_reference(Complex s) {
  check_s(s, "zeta_reference");
  const std::int64_t N = em_cutoff(s.imag());
  const auto logs = split_log_table(N);
  double re = 0.0, im = 0.0;
  for (std::int64_t n = 1; n < N; ++n) {
    const SplitLog& l = (*logs)[static_cast<std::size_t>(n)];
    const double a = std::exp(-s.real() * l.hi);
    const double ph = reduced_phase(s.imag(), l);
    re += a * std::cos(ph);
    im -= a * std::sin(ph);
  }
  return Complex(re, im) + em_tail(s, N, (*logs)[static_cast<std::size_t>(N)], false).first;
}

std::vector<Complex> zeta_grid(double sigma, const GridSpec& grid) {
  grid.validate();
  const double tmax = std::max(std::abs(grid.t0), std::abs(grid.last()));
  check_s(Complex(sigma, tmax), "zeta_grid");
  require(!(sigma == 1.0 && grid.t0 <= 0.0 && grid.last() >= 0.0), ErrorKind::pole,
          "zeta_grid: grid passes through the pole at s = 1");
  const std::int64_t Nmax = em_cutoff(tmax);
  const auto logs = split_log_table(Nmax);
  BlockTerms terms;
  terms.n.reserve(static_cast<std::size_t>(Nmax - 1));
  for (std::int64_t n = 1; n < Nmax; ++n) {
    const SplitLog& l = (*logs)[static_cast<std::size_t>(n)];
    terms.n.push_back(n);
    terms.amp.push_back(std::exp(-sigma * l.hi));
    terms.log_n.push_back(l);
  }
  // Each chunk sums n < N(chunk) where N is the cutoff for the chunk's
  // largest |t|; the tail below must use that same N.
  auto active = [](double t) { return static_cast<std::size_t>(em_cutoff(t) - 1); };
  std::vector<Complex> out(static_cast<std::size_t>(grid.count));
  kernels::rotate_sum(terms, grid, out, active);
  const std::int64_t period = kernels::rebuild_period(terms.abs_sum());
  for (std::int64_t k = 0; k < grid.count; ++k) {
    const std::int64_t k0 = (k / period) * period;
    const std::int64_t k1 = std::min(grid.count, k0 + period);
    const double tm = std::max(std::abs(grid.at(k0)), std::abs(grid.at(k1 - 1)));
    const std::int64_t N = std::min<std::int64_t>(Nmax, em_cutoff(tm));
    const Complex s(sigma, grid.at(k));
    out[static_cast<std::size_t>(k)] +=
        em_tail(s, N, (*logs)[static_cast<std::size_t>(N)], false).first;
  }
  return out;
}

AfeResult zeta_afe(Complex s) {
  require(std::isfinite(s.real()) && std::isfinite(s.imag()), ErrorKind::input_domain,
          "zeta_afe: non-finite argument");
  require(s.real() >= 0.0 && s.real() <= 1.0, ErrorKind::domain,
          "zeta_afe: requires sigma in [0, 1]");
  const double t = std::abs(s.imag());
  require(t >= 2.0 * kPi, ErrorKind::domain, "zeta_afe: requires |t| >= 2 pi");
  AfeResult r;
  r.x_cut = std::sqrt(t / (2.0 * kPi));
  r.y_cut = r.x_cut;
  const auto n = static_cast<std::int64_t>(std::floor(r.x_cut));
  const Complex s1 = 1.0 - s;
  for (std::int64_t k = 1; k <= n; ++k) {
    const SplitLog l = split_log(k);
    r.main_sum += power_minus(l, s);
    r.dual_sum += power_minus(l, s1);
  }
  r.chi = chi_factor(s);
  r.value = r.main_sum + r.chi * r.dual_sum;
  r.error_budget = std::log(t) / std::pow(r.x_cut, s.real()) +
                   std::pow(r.x_cut, 1.0 - s.real()) / std::sqrt(t);
  return r;
}

Complex zeta_afe_long(Complex s, double T) {
  require(std::isfinite(s.real()) && std::isfinite(s.imag()) && std::isfinite(T),
          ErrorKind::input_domain, "zeta_afe_long: non-finite argument");
  require(T >= 3.0, ErrorKind::domain, "zeta_afe_long: requires T >= 3");
  require(s.real() >= 0.5, ErrorKind::domain, "zeta_afe_long: requires sigma >= 1/2");
  require(s.imag() >= T && s.imag() <= 2.0 * T, ErrorKind::domain,
          "zeta_afe_long: requires t in [T, 2T]");
  const auto N = static_cast<std::int64_t>(std::floor(T));
  require(N <= kMaxBlockLength, ErrorKind::capacity,
          "zeta_afe_long: sum length exceeds limit kMaxBlockLength=1e6");
  return zeta_sum(DirichletBlock::unit(0.0, static_cast<double>(N), s.real()), s.imag());
}

Complex log_deriv_zeta(Complex s) {
  const auto [z, dz] = zeta_and_derivative(s);
  require(std::abs(z) >= kLogDerivFloor, ErrorKind::conditioning,
          "log_deriv_zeta: |zeta(s)| = " + fmt(std::abs(z)) + " below 1e-8");
  return dz / z;
}

double smoothed_mangoldt_residual(Complex s, double Y, double T) {
  require(std::isfinite(s.real()) && std::isfinite(s.imag()) && std::isfinite(Y) &&
              std::isfinite(T),
          ErrorKind::input_domain, "smoothed_mangoldt_residual: non-finite argument");
  require(s.real() >= 0.5 && s.real() <= 2.0, ErrorKind::domain,
          "smoothed_mangoldt_residual: requires sigma in [1/2, 2]");
  require(T > 1.0, ErrorKind::domain, "smoothed_mangoldt_residual: requires T > 1");
  const double L = std::log(T);
  const double at = std::abs(s.imag());
  require(at >= L * L / 2.0 && at <= T, ErrorKind::domain,
          "smoothed_mangoldt_residual: requires |Im s| in [(log T)^2/2, T]");
  require(Y >= 10.0, ErrorKind::domain, "smoothed_mangoldt_residual: requires Y >= 10");
  // e^{-n/Y} < 1e-18 beyond n = Y log(1e18).
  const auto N = static_cast<std::int64_t>(std::ceil(Y * 18.0 * std::log(10.0)));
  require(N <= kMaxSieve, ErrorKind::capacity,
          "smoothed_mangoldt_residual: truncation exceeds limit kMaxSieve=1e8");
  const auto lambda = sieve_coefficients(CoeffKind::von_mangoldt, N);
  Complex sum{};
  for (std::int64_t n = 2; n <= N; ++n) {
    const double c = lambda[static_cast<std::size_t>(n - 1)];
    if (c == 0.0) continue;
    sum += c * std::exp(-static_cast<double>(n) / Y) * power_minus(split_log(n), s);
  }
  return std::abs(sum + log_deriv_zeta(s));
}

namespace {

void check_perron_domain(double sigma, double t, double T, const char* who) {
  require(std::isfinite(sigma) && std::isfinite(t) && std::isfinite(T),
          ErrorKind::input_domain, std::string(who) + ": non-finite argument");
  require(T > std::exp(2.0), ErrorKind::domain, std::string(who) + ": requires T > e^2");
  const double L = std::log(T);
  require(sigma >= 0.5 && sigma <= 1.0 - 2.0 / L, ErrorKind::domain,
          std::string(who) + ": requires sigma in [1/2, 1 - 2/log T]");
  require(std::abs(t) >= std::pow(T, (1.0 - sigma) / 2.0), ErrorKind::domain,
          std::string(who) + ": requires |t| >= T^{(1-sigma)/2}");
}

}  // namespace

PerronResult perron_check(double sigma, double t, double T, double A, double B) {
  check_perron_domain(sigma, t, T, "perron_check");
  require(std::isfinite(A) && std::isfinite(B), ErrorKind::input_domain,
          "perron_check: non-finite A or B");
  require(A >= 1.0 && A < B && B <= 2.0 * A && 2.0 * A <= 2.0 * std::sqrt(T),
          ErrorKind::domain, "perron_check: requires 1 <= A < B <= 2A <= 2 T^{1/2}");
  const double c = 1.0 / std::log(T);
  const double lA = std::log(A);
  const double lB = std::log(B);
  auto kernel = [&](double u) {
    const Complex s(c, u);
    // (B^s - A^s)/s, with the difference taken in a cancellation-free form.
    const Complex d = std::exp(s * lA) * cexpm1(s * (lB - lA));
    return d / s;
  };
  auto grid_fn = [&](const GridSpec& g) {
    auto z = zeta_grid(sigma + c, GridSpec{t + g.t0, g.dt, g.count});
    for (std::int64_t k = 0; k < g.count; ++k) z[static_cast<std::size_t>(k)] *= kernel(g.at(k));
    return z;
  };
  auto point_fn = [&](double u) { return zeta_reference(Complex(sigma + c, t + u)) * kernel(u); };

  PerronResult r;
  r.direct = zeta_sum(DirichletBlock::unit(A, B, sigma), t);
  const Complex w(1.0 - sigma, -t);
  r.pole_term = (std::exp(w * lB) - std::exp(w * lA)) / w;

  auto run = [&](double h) {
    const auto mesh = quad::graded_mesh(-T, T, h, {0.0, -t}, c / 4.0);
    return quad::integrate(mesh, grid_fn, point_fn) / (2.0 * kPi);
  };
  double h = 0.5;
  Complex prev = run(h);
  double change = 0.0;
  for (int iter = 0; iter < 4; ++iter) {
    const Complex next = run(h / 2.0);
    change = std::abs(next - prev);
    h /= 2.0;
    prev = next;
    if (change < 1e-3) {
      r.integral = prev;
      r.resolution_change = change;
      r.step = h;
      r.deviation = std::abs(r.direct - (r.integral + r.pole_term));
      return r;
    }
  }
  fail(ErrorKind::numerical, "perron_check: quadrature did not converge (last change " +
                                 fmt(change) + ", target 1e-3)");
}

double majorant_integral(double sigma, double t, double T, double window) {
  check_perron_domain(sigma, t, T, "majorant_integral");
  require(std::isfinite(window) && window >= 0.0, ErrorKind::input_domain,
          "majorant_integral: window must be finite and >= 0");
  const double c = 1.0 / std::log(T);
  const double sc = sigma + c;
  auto weight = [&](double u) { return 1.0 / (std::abs(u) + c); };
  auto grid_fn = [&](const GridSpec& g) {
    auto z = zeta_grid(sc, GridSpec{t + g.t0, g.dt, g.count});
    std::vector<Complex> out(z.size());
    for (std::int64_t k = 0; k < g.count; ++k)
      out[static_cast<std::size_t>(k)] = std::abs(z[static_cast<std::size_t>(k)]) * weight(g.at(k));
    return out;
  };
  auto point_fn = [&](double u) {
    return Complex(std::abs(zeta_reference(Complex(sc, t + u))) * weight(u), 0.0);
  };
  // Integrate over [-T, T] minus the excluded window around u = -t.
  std::vector<std::pair<double, double>> parts;
  const double wl = -t - window;
  const double wr = -t + window;
  if (wl > -T) parts.push_back({-T, std::min(T, wl)});
  if (wr < T) parts.push_back({std::max(-T, wr), T});
  auto run = [&](double h) {
    double total = 0.0;
    for (auto [a, b] : parts) {
      if (b <= a) continue;
      const auto mesh = quad::graded_mesh(a, b, h, {0.0}, c / 4.0);
      total += quad::integrate(mesh, grid_fn, point_fn).real();
    }
    return total;
  };
  double h = 0.5;
  double prev = run(h);
  for (int iter = 0; iter < 4; ++iter) {
    const double next = run(h / 2.0);
    const double change = std::abs(next - prev);
    h /= 2.0;
    prev = next;
    if (change <= 1e-6 * std::max(1.0, std::abs(next))) return next;
  }
  fail(ErrorKind::numerical, "majorant_integral: quadrature did not converge");
}

}  // namespace zdl
