#include "zdl/eval.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "zdl/kernels.hpp"

namespace zdl {

namespace {

// 2*pi as an unevaluated double-double.
constexpr double kTwoPiHi = 6.283185307179586232;
constexpr double kTwoPiLo = 2.4492935982947064e-16;
constexpr double kInvTwoPi = 0.15915494309189533577;

std::string fmt(double x) { return std::to_string(x); }

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::input_domain: return "input_domain";
    case ErrorKind::capacity: return "capacity";
    case ErrorKind::pole: return "pole";
    case ErrorKind::domain: return "domain";
    case ErrorKind::conditioning: return "conditioning";
    case ErrorKind::numerical: return "numerical";
    case ErrorKind::horizon: return "horizon";
    case ErrorKind::incomplete: return "incomplete";
    case ErrorKind::order_violation: return "order_violation";
    case ErrorKind::parse: return "parse";
    case ErrorKind::hypothesis_failure: return "hypothesis_failure";
    case ErrorKind::branch_failure: return "branch_failure";
    case ErrorKind::identity_failure: return "identity_failure";
    case ErrorKind::profile: return "profile";
    case ErrorKind::spacing: return "spacing";
    case ErrorKind::io: return "io";
    case ErrorKind::config: return "config";
  }
  return "unknown";
}

std::pair<double, double> GridSpec::at_split(std::int64_t k) const {
  const auto kd = static_cast<double>(k);
  const double p = kd * dt;
  const double pe = std::fma(kd, dt, -p);
  const double s = t0 + p;
  const double b = s - t0;
  return {s, (t0 - (s - b)) + (p - b) + pe};
}

void GridSpec::validate() const {
  require(std::isfinite(t0) && std::isfinite(dt), ErrorKind::input_domain,
          "grid: non-finite t0 or dt");
  require(dt > 0.0, ErrorKind::input_domain, "grid: dt must be positive");
  require(count >= 1, ErrorKind::input_domain, "grid: count must be >= 1");
  require(count <= kMaxGridCount, ErrorKind::capacity,
          "grid: count exceeds limit kMaxGridCount=1e8");
}

namespace {

SplitLog split_log_quad(std::int64_t n) {
  __float128 l = logq(static_cast<__float128>(n));
  SplitLog out;
  out.hi = static_cast<double>(l);
  out.lo = static_cast<double>(l - static_cast<__float128>(out.hi));
  return out;
}

// logq costs about a microsecond; blocks below this length reuse a table.
constexpr std::int64_t kSplitLogTable = 1 << 17;

}  // namespace

SplitLog split_log(std::int64_t n) {
  if (n >= 1 && n < kSplitLogTable) {
    static const std::vector<SplitLog> table = [] {
      std::vector<SplitLog> v(kSplitLogTable);
      for (std::int64_t m = 1; m < kSplitLogTable; ++m) v[static_cast<std::size_t>(m)] = split_log_quad(m);
      return v;
    }();
    return table[static_cast<std::size_t>(n)];
  }
  return split_log_quad(n);
}

double reduced_phase(double t, SplitLog log_n) {
  // t*hi exactly as p + e, then p reduced by a two-part 2*pi.
  const double p = t * log_n.hi;
  double e = std::fma(t, log_n.hi, -p);
  e += t * log_n.lo;
  const double k = std::nearbyint(p * kInvTwoPi);
  double r = std::fma(-k, kTwoPiHi, p);
  r -= k * kTwoPiLo;
  return r + e;
}

double reduced_phase(double t_hi, double t_lo, SplitLog log_n) {
  return reduced_phase(t_hi, log_n) + t_lo * log_n.hi;
}

double BlockTerms::abs_sum() const {
  double s = 0.0;
  for (double a : amp) s += std::abs(a);
  return s;
}

DirichletBlock::DirichletBlock(double lo, double hi, double sigma,
                               CoeffKind kind,
                               std::shared_ptr<const std::vector<double>> coeffs)
    : lo_(lo), hi_(hi), sigma_(sigma), kind_(kind), coeffs_(std::move(coeffs)) {
  require(std::isfinite(lo) && std::isfinite(hi) && std::isfinite(sigma),
          ErrorKind::input_domain, "block: non-finite endpoint or sigma");
  require(lo < hi, ErrorKind::input_domain,
          "block: requires lo < hi (lo=" + fmt(lo) + ", hi=" + fmt(hi) + ")");
  require(hi >= 0.0, ErrorKind::input_domain, "block: hi must be >= 0");
  require(length() <= kMaxBlockLength, ErrorKind::capacity,
          "block: length exceeds limit kMaxBlockLength=1e6");
}

std::int64_t DirichletBlock::first_index() const {
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(lo_)) + 1);
}

std::int64_t DirichletBlock::last_index() const {
  return static_cast<std::int64_t>(std::floor(hi_));
}

std::int64_t DirichletBlock::length() const {
  return std::max<std::int64_t>(0, last_index() - first_index() + 1);
}

DirichletBlock DirichletBlock::unit(double lo, double hi, double sigma) {
  return DirichletBlock(lo, hi, sigma, CoeffKind::unit, nullptr);
}

DirichletBlock DirichletBlock::moebius(double lo, double hi, double sigma) {
  DirichletBlock probe(lo, hi, sigma, CoeffKind::moebius, nullptr);
  auto c = std::make_shared<std::vector<double>>(
      sieve_coefficients(CoeffKind::moebius, std::max<std::int64_t>(1, probe.last_index())));
  return DirichletBlock(lo, hi, sigma, CoeffKind::moebius, std::move(c));
}

DirichletBlock DirichletBlock::von_mangoldt(double lo, double hi, double sigma) {
  DirichletBlock probe(lo, hi, sigma, CoeffKind::von_mangoldt, nullptr);
  auto c = std::make_shared<std::vector<double>>(sieve_coefficients(
      CoeffKind::von_mangoldt, std::max<std::int64_t>(1, probe.last_index())));
  return DirichletBlock(lo, hi, sigma, CoeffKind::von_mangoldt, std::move(c));
}

DirichletBlock DirichletBlock::custom(double lo, double hi, double sigma,
                                      std::vector<double> coeffs) {
  DirichletBlock probe(lo, hi, sigma, CoeffKind::custom, nullptr);
  require(static_cast<std::int64_t>(coeffs.size()) >= probe.last_index(),
          ErrorKind::input_domain,
          "block: custom coefficients do not cover (lo, hi]");
  for (double c : coeffs)
    require(std::isfinite(c), ErrorKind::input_domain,
            "block: non-finite custom coefficient");
  return DirichletBlock(lo, hi, sigma, CoeffKind::custom,
                        std::make_shared<const std::vector<double>>(std::move(coeffs)));
}

double DirichletBlock::coefficient(std::int64_t n) const {
  if (kind_ == CoeffKind::unit) return 1.0;
  return (*coeffs_)[static_cast<std::size_t>(n - 1)];
}

DirichletBlock DirichletBlock::with_sigma(double sigma) const {
  return DirichletBlock(lo_, hi_, sigma, kind_, coeffs_);
}

const BlockTerms& DirichletBlock::terms() const {
  if (!terms_) {
    auto t = std::make_shared<BlockTerms>();
    const std::int64_t a = first_index();
    const std::int64_t b = last_index();
    if (a <= b) {
      t->n.reserve(static_cast<std::size_t>(b - a + 1));
      for (std::int64_t n = a; n <= b; ++n) {
        const double c = coefficient(n);
        if (c == 0.0) continue;
        const SplitLog l = split_log(n);
        t->n.push_back(n);
        t->amp.push_back(c * std::exp(-sigma_ * l.hi));
        t->log_n.push_back(l);
      }
    }
    terms_ = std::move(t);
  }
  return *terms_;
}

Complex zeta_sum(const DirichletBlock& block, double t) { return zeta_sum(block, t, 0.0); }

Complex zeta_sum(const DirichletBlock& block, double t_hi, double t_lo) {
  require(std::isfinite(t_hi) && std::isfinite(t_lo), ErrorKind::input_domain,
          "zeta_sum: non-finite t");
  const BlockTerms& terms = block.terms();
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const double ph = reduced_phase(t_hi, t_lo, terms.log_n[i]);
    re += terms.amp[i] * std::cos(ph);
    im -= terms.amp[i] * std::sin(ph);
  }
  return {re, im};
}

PrefixMax prefix_max_sum(const DirichletBlock& block, double t) {
  require(std::isfinite(t), ErrorKind::input_domain,
          "prefix_max_sum: non-finite t");
  const BlockTerms& terms = block.terms();
  PrefixMax best{static_cast<std::int64_t>(std::floor(block.lo())), 0.0};
  double re = 0.0;
  double im = 0.0;
  bool first = true;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const double ph = reduced_phase(t, terms.log_n[i]);
    re += terms.amp[i] * std::cos(ph);
    im -= terms.amp[i] * std::sin(ph);
    const double v = std::hypot(re, im);
    if (first || v > best.max_value) {
      best = {terms.n[i], v};
      first = false;
    }
  }
  return best;
}

std::vector<Complex> grid_eval(const DirichletBlock& block,
                               const GridSpec& grid) {
  grid.validate();
  require(block.length() <= kMaxBlockLength, ErrorKind::capacity,
          "grid_eval: block length exceeds limit kMaxBlockLength=1e6");
  std::vector<Complex> out(static_cast<std::size_t>(grid.count));
  kernels::rotate_sum(block.terms(), grid, out);
  return out;
}

double partial_summation_check(double sigma, double t, double beta, double M1,
                               double M2) {
  require(std::isfinite(sigma) && std::isfinite(t) && std::isfinite(beta) &&
              std::isfinite(M1) && std::isfinite(M2),
          ErrorKind::input_domain, "partial_summation_check: non-finite input");
  require(M1 >= 1.0, ErrorKind::input_domain,
          "partial_summation_check: requires M1 >= 1");
  require(M1 < M2, ErrorKind::input_domain,
          "partial_summation_check: requires M1 < M2");
  const auto lhs_block = DirichletBlock::unit(M1, M2, sigma);
  const double lhs = std::abs(zeta_sum(lhs_block, t));
  const PrefixMax shifted = prefix_max_sum(lhs_block.with_sigma(sigma + beta), t);
  const double M = beta >= 0.0 ? M2 : M1;
  const double rhs = 4.0 * std::pow(M, beta) * shifted.max_value;
  if (rhs == 0.0) return 0.0;
  return lhs / rhs;
}

std::vector<std::int8_t> moebius_table(std::int64_t N) {
  require(N >= 1, ErrorKind::input_domain, "sieve: N must be >= 1");
  require(N <= kMaxSieve, ErrorKind::capacity,
          "sieve: N exceeds limit kMaxSieve=1e8");
  const auto n = static_cast<std::size_t>(N);
  std::vector<std::int8_t> mu(n + 1, 1);
  std::vector<bool> composite(n + 1, false);
  std::vector<std::uint32_t> primes;
  mu[0] = 0;
  for (std::size_t i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(static_cast<std::uint32_t>(i));
      mu[i] = -1;
    }
    for (std::uint32_t p : primes) {
      const std::size_t m = i * p;
      if (m > n) break;
      composite[m] = true;
      if (i % p == 0) {
        mu[m] = 0;
        break;
      }
      mu[m] = static_cast<std::int8_t>(-mu[i]);
    }
  }
  mu.erase(mu.begin());
  return mu;
}

std::vector<double> sieve_coefficients(CoeffKind kind, std::int64_t N) {
  require(N >= 1, ErrorKind::input_domain, "sieve: N must be >= 1");
  require(N <= kMaxSieve, ErrorKind::capacity,
          "sieve: N exceeds limit kMaxSieve=1e8");
  require(kind == CoeffKind::moebius || kind == CoeffKind::von_mangoldt,
          ErrorKind::input_domain, "sieve: kind must be moebius or von_mangoldt");
  const auto n = static_cast<std::size_t>(N);
  if (kind == CoeffKind::moebius) {
    const auto mu = moebius_table(N);
    return {mu.begin(), mu.end()};
  }
  // Smallest prime factor by a linear sieve; Lambda(m) = log p iff m = p^k.
  std::vector<std::uint32_t> spf(n + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::size_t i = 2; i <= n; ++i) {
    if (spf[i] == 0) {
      spf[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      const std::size_t m = i * p;
      if (p > spf[i] || m > n) break;
      spf[m] = p;
    }
  }
  std::vector<double> lambda(n, 0.0);
  for (std::size_t i = 2; i <= n; ++i) {
    const std::size_t p = spf[i];
    std::size_t m = i;
    while (m % p == 0) m /= p;
    if (m == 1) lambda[i - 1] = std::log(static_cast<double>(p));
  }
  return lambda;
}

}  // namespace zdl
