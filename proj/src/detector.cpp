#include "zdl/detector.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <utility>

#include "zdl/error.hpp"
#include "zdl/kernels.hpp"

namespace zdl {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

int mu_of(std::int64_t r) {
  int m = 1;
  for (std::int64_t p = 2; p * p <= r; ++p) {
    if (r % p) continue;
    r /= p;
    if (r % p == 0) return 0;
    m = -m;
  }
  if (r > 1) m = -m;
  return m;
}

// n^{-beta - i gamma}
Complex term(std::int64_t n, double beta, double gamma) {
  const SplitLog l = split_log(n);
  const double a = std::exp(-beta * l.hi);
  const double ph = reduced_phase(gamma, l);
  return {a * std::cos(ph), -a * std::sin(ph)};
}

struct PrefixPick {
  double y_prime = 0.0;
  double value = 0.0;
};

// Best y' in (y, 2y] for |sum_{y < l <= y'} l^{-1-i gamma}|.
PrefixPick best_prefix(double gamma, double y) {
  const auto block = DirichletBlock::unit(y, 2.0 * y, 1.0);
  if (block.empty()) return {};
  const PrefixMax pm = prefix_max_sum(block, gamma);
  return {static_cast<double>(pm.y_star), pm.max_value};
}

}  // namespace

double DetectorConfig::R_len() const { return std::pow(T, eps * eps / 2.0); }

void DetectorConfig::validate() const {
  require(std::isfinite(nu) && std::isfinite(eps) && std::isfinite(T) && std::isfinite(U) &&
              std::isfinite(beta),
          ErrorKind::input_domain, "detector: non-finite parameter");
  require(nu > 0.0 && nu <= 0.5, ErrorKind::domain, "detector: requires nu in (0, 1/2]");
  require(eps > 0.0, ErrorKind::domain, "detector: requires eps > 0");
  require(T >= 3.0, ErrorKind::domain, "detector: requires T >= 3");
  require(U >= 1.0 && U <= T / 2.0, ErrorKind::domain, "detector: requires 1 <= U <= T/2");
  require(beta > 0.0 && beta < 1.0, ErrorKind::domain, "detector: requires beta in (0, 1)");
  require(U * R_len() <= 1e7, ErrorKind::capacity, "detector: U R exceeds 1e7");
}

std::int64_t mollified_coeffs(double U, double R, std::int64_t n) {
  require(U >= 1.0 && R >= 1.0, ErrorKind::domain, "mollified_coeffs: requires U, R >= 1");
  require(n >= 1 && static_cast<double>(n) <= U * R, ErrorKind::input_domain,
          "mollified_coeffs: n = " + std::to_string(n) + " outside [1, U R]");
  std::int64_t a = 0;
  for (std::int64_t r = 1; r * r <= n; ++r) {
    if (n % r) continue;
    const std::int64_t q = n / r;
    if (static_cast<double>(r) <= R && static_cast<double>(q) <= U) a += mu_of(r);
    if (q != r && static_cast<double>(q) <= R && static_cast<double>(r) <= U) a += mu_of(q);
  }
  return a;
}

std::vector<std::int64_t> mollified_table(double U, double R) {
  require(U >= 1.0 && R >= 1.0, ErrorKind::domain, "mollified_table: requires U, R >= 1");
  const auto N = static_cast<std::int64_t>(std::floor(U * R));
  require(N <= 100'000'000, ErrorKind::capacity, "mollified_table: U R exceeds 1e8");
  const auto Rf = static_cast<std::int64_t>(std::floor(R));
  const auto Uf = static_cast<std::int64_t>(std::floor(U));
  const auto mu = moebius_table(std::max<std::int64_t>(Rf, 1));
  std::vector<std::int64_t> a(static_cast<std::size_t>(N), 0);
  for (std::int64_t r = 1; r <= Rf; ++r) {
    const int m = mu[static_cast<std::size_t>(r - 1)];
    if (m == 0) continue;
    for (std::int64_t l = 1; l <= Uf && l * r <= N; ++l) a[static_cast<std::size_t>(l * r - 1)] += m;
  }
  return a;
}

DyadicSearch dyadic_search_at(double beta, double gamma, const DetectorConfig& config,
                              bool check_identity) {
  config.validate();
  require(std::isfinite(gamma) && std::isfinite(beta), ErrorKind::input_domain,
          "dyadic_search: non-finite rho");
  const double R = config.R_len();
  const double L = std::log(config.T);
  const auto a = mollified_table(config.U, R);
  const auto N = static_cast<std::int64_t>(a.size());
  DyadicSearch s;
  s.threshold = 1.0 / (4.0 * L);
  const auto n0 = static_cast<std::int64_t>(std::floor(R)) + 1;
  std::vector<Complex> terms(static_cast<std::size_t>(N + 1));
  Complex full{};
  for (std::int64_t n = n0; n <= N; ++n) {
    const auto c = a[static_cast<std::size_t>(n - 1)];
    if (c == 0) continue;
    terms[static_cast<std::size_t>(n)] = static_cast<double>(c) * term(n, beta, gamma);
    full += terms[static_cast<std::size_t>(n)];
  }
  s.full_sum = std::abs(full);
  s.identity_gap = std::abs(1.0 + full);
  if (check_identity)
    require(s.full_sum >= 0.5, ErrorKind::identity_failure,
            "dyadic_search: |sum_{R<n<=UR} a_n n^-rho| = " + fmt(s.full_sum) +
                " below 1/2 at gamma = " + fmt(gamma) + " (identity gap " +
                fmt(s.identity_gap) + ")");
  bool found = false;
  for (int k = 0;; ++k) {
    const double K = std::ldexp(R, k);
    if (K > config.U * R) break;
    Complex b{};
    const auto lo = static_cast<std::int64_t>(std::floor(K)) + 1;
    const auto hi = std::min(N, static_cast<std::int64_t>(std::floor(2.0 * K)));
    for (std::int64_t n = lo; n <= hi; ++n) b += terms[static_cast<std::size_t>(n)];
    s.blocks.push_back(std::abs(b));
    if (!found && s.blocks.back() >= s.threshold) {
      found = true;
      s.K = K;
      s.k = k;
      s.block_value = s.blocks.back();
    }
  }
  require(found, ErrorKind::identity_failure,
          "dyadic_search: no dyadic block reaches 1/(4 log T) at gamma = " + fmt(gamma) +
              " (full sum " + fmt(s.full_sum) + ")");
  return s;
}

DyadicSearch dyadic_search(double gamma, const DetectorConfig& config) {
  require(std::abs(gamma) >= config.U && std::abs(gamma) <= 2.0 * config.U, ErrorKind::domain,
          "dyadic_search: requires |gamma| in [U, 2U]");
  return dyadic_search_at(config.beta, gamma, config, true);
}

double witness_value(double gamma, double M, double M_prime) {
  return std::abs(zeta_sum(DirichletBlock::unit(M, M_prime, 1.0), gamma));
}

Classification classify_rho(double beta, double gamma, const DetectorConfig& config,
                            bool check_identity) {
  return classify_search(beta, gamma, dyadic_search_at(beta, gamma, config, check_identity), config);
}

Classification classify_search(double beta, double gamma, DyadicSearch search,
                               const DetectorConfig& config) {
  config.validate();
  Classification c;
  c.search = std::move(search);
  const double T = config.T, U = config.U, eps = config.eps, nu = config.nu;
  const double R = config.R_len();
  const double L = std::log(T);
  const double Te = std::pow(T, eps);
  const double K = c.search.K;
  WitnessRecord& w = c.witness;
  w.t_or_gamma = gamma;
  if (K <= R * Te || K >= U / Te) {
    w.tag = WitnessTag::U1;
    w.M = K;
    w.M_prime = 2.0 * K;
    w.value = c.search.block_value;
    w.threshold = c.search.threshold;
    c.route = K <= R * Te ? "U1: K <= R T^eps" : "U1: K >= U T^-eps";
    return c;
  }
  // Pigeonhole over r: strongest weighted l-block.
  const auto Rf = static_cast<std::int64_t>(std::floor(R));
  double best_ratio = -1.0;
  for (std::int64_t r = 1; r <= Rf; ++r) {
    if (mu_of(r) == 0) continue;
    const double lo = K / static_cast<double>(r);
    const double hi = std::min(2.0 * K / static_cast<double>(r), std::floor(U));
    if (hi <= lo) continue;
    Complex b{};
    for (std::int64_t l = static_cast<std::int64_t>(std::floor(lo)) + 1;
         l <= static_cast<std::int64_t>(std::floor(hi)); ++l)
      b += term(l, beta, gamma);
    const double thr = std::pow(static_cast<double>(r), beta - 1.0) / (8.0 * L * L);
    const double ratio = std::abs(b) / thr;
    if (ratio > best_ratio) {
      best_ratio = ratio;
      c.r = r;
      c.ell_block = std::abs(b);
      c.ell_threshold = thr;
    }
  }
  if (best_ratio < 1.0) c.diagnostic = "pigeonhole over r fell short (ratio " + fmt(best_ratio) + ")";
  const double y = K / static_cast<double>(c.r);
  const double sqrtT = std::sqrt(T);
  auto threshold = [&](double m) { return std::pow(m, -nu - eps); };
  auto take = [&](double m, const char* route) {
    const PrefixPick p = best_prefix(gamma, m);
    w.M = m;
    w.M_prime = p.y_prime;
    w.value = p.value;
    w.threshold = threshold(m);
    c.route = route;
  };
  auto argmax = [&](const std::vector<double>& ys, const char* route) {
    double br = -1.0;
    double bm = 0.0;
    for (double m : ys) {
      const double ratio = best_prefix(gamma, m).value / threshold(m);
      if (ratio > br) {
        br = ratio;
        bm = m;
      }
    }
    if (br >= 0.0) take(bm, route);
    return br >= 0.0;
  };
  if (y <= sqrtT / 2.0) {
    w.tag = WitnessTag::case1;
    bool ok = false;
    if (y >= Te) {
      take(y, "case1: y = K/r");
      ok = w.value >= w.threshold;
    }
    if (!ok) {
      std::vector<double> ys;
      for (auto m = static_cast<std::int64_t>(std::ceil(Te));
           static_cast<double>(m) <= sqrtT / 2.0; ++m)
        ys.push_back(static_cast<double>(m));
      if (!argmax(ys, "case1: argmax over integer y in [T^eps, T^1/2/2]")) {
        c.diagnostic = "case 1: [T^eps, T^1/2/2] contains no integer";
        return c;
      }
    }
  } else {
    w.tag = WitnessTag::case2;
    const double ymax = U / (2.0 * sqrtT);
    std::vector<double> ys;
    const double y0 = std::abs(gamma) / (4.0 * std::numbers::pi * y);
    if (y0 >= Te && y0 <= ymax) ys.push_back(y0);
    for (double m = Te; m <= ymax; m *= 2.0) ys.push_back(m);
    if (!argmax(ys, "case2: argmax over dual cut and dyadic lattice")) {
      c.diagnostic = "case 2: y range [T^eps, U/(2 T^1/2)] = [" + fmt(Te) + ", " + fmt(ymax) +
                     "] is empty";
      return c;
    }
    if (!ys.empty() && w.M == y0) c.route = "case2: dual cut |gamma|/(4 pi K/r)";
  }
  const double fresh = witness_value(gamma, w.M, w.M_prime);
  c.verified = std::abs(fresh - w.value) <= 1e-10 && fresh >= w.threshold;
  if (!c.verified && c.diagnostic.empty())
    c.diagnostic = "witness value " + fmt(fresh) + " below threshold " + fmt(w.threshold);
  return c;
}

Classification classify_zero(double gamma, const DetectorConfig& config, const ZeroTable& table) {
  config.validate();
  require(2.0 * config.U <= table.t_max, ErrorKind::horizon,
          "classify_zero: table horizon " + fmt(table.t_max) + " below 2U = " +
              fmt(2.0 * config.U));
  const double g = std::abs(gamma);
  require(g >= config.U && g <= 2.0 * config.U, ErrorKind::domain,
          "classify_zero: requires |gamma| in [U, 2U]");
  auto it = std::lower_bound(table.records.begin(), table.records.end(), g - 1e-6,
                             [](const ZeroRecord& r, double x) { return r.gamma < x; });
  require(it != table.records.end() && std::abs(it->gamma - g) <= 1e-6, ErrorKind::input_domain,
          "classify_zero: " + fmt(gamma) + " is not an ordinate of the table");
  return classify_rho(config.beta, gamma, config, true);
}

DetectorRun run_detector(const DetectorConfig& config, const ZeroTable& table) {
  config.validate();
  require(2.0 * config.U <= table.t_max, ErrorKind::horizon,
          "run_detector: table horizon " + fmt(table.t_max) + " below 2U = " +
              fmt(2.0 * config.U));
  DetectorRun run;
  run.config = config;
  run.R = config.R_len();
  std::vector<double> gammas;
  for (const auto& r : table.records)
    if (r.gamma >= config.U && r.gamma <= 2.0 * config.U) gammas.push_back(r.gamma);
  run.zeros.resize(gammas.size());
  const auto n = static_cast<std::int64_t>(gammas.size());
  const int nthreads = kernels::workers();
#pragma omp parallel for schedule(dynamic, 1) \
    num_threads(nthreads > 0 ? nthreads : omp_get_max_threads())
  for (std::int64_t i = 0; i < n; ++i) {
    auto& out = run.zeros[static_cast<std::size_t>(i)];
    try {
      out = classify_rho(config.beta, gammas[static_cast<std::size_t>(i)], config, true);
    } catch (const Error& e) {
      out = Classification{};
      out.witness.t_or_gamma = gammas[static_cast<std::size_t>(i)];
      out.route = std::string("failed: ") + std::string(to_string(e.kind()));
      out.diagnostic = e.what();
    }
  }
  for (const auto& c : run.zeros) {
    if (c.route.rfind("failed", 0) == 0) ++run.unverified;
    else if (c.witness.tag == WitnessTag::U1) ++run.u1;
    else if (c.verified) ++run.verified;
    else ++run.unverified;
  }
  run.u1_budget_ratio = static_cast<double>(run.u1) /
                        std::pow(config.U, 2.0 * config.nu + 1.5 * config.eps);
  return run;
}

std::vector<std::uint64_t> divisor_counts(int j, std::int64_t N) {
  require(j >= 1, ErrorKind::domain, "divisor_counts: requires j >= 1");
  require(N >= 1 && N <= 10'000'000, ErrorKind::capacity,
          "divisor_counts: N outside [1, 1e7]");
  const auto n = static_cast<std::size_t>(N);
  std::vector<std::uint64_t> d(n, 1), next(n);
  for (int step = 1; step < j; ++step) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t a = 1; a <= n; ++a)
      for (std::size_t m = a; m <= n; m += a) next[m - 1] += d[a - 1];
    d.swap(next);
  }
  return d;
}

double divisor_moment(int k, double K, double nu) {
  require(k >= 1 && std::isfinite(K) && K >= 1.0 && std::isfinite(nu), ErrorKind::domain,
          "divisor_moment: requires k >= 1, K >= 1");
  double lo = 1.0, hi = 1.0;
  for (int i = 0; i < k; ++i) {
    lo *= K;
    hi *= 2.0 * K;
  }
  require(hi <= 1e7, ErrorKind::capacity, "divisor_moment: (2K)^k exceeds 1e7");
  const auto n0 = static_cast<std::int64_t>(std::floor(lo)) + 1;
  const auto n1 = static_cast<std::int64_t>(std::floor(hi));
  const auto d = divisor_counts(2 * k, n1);
  double s = 0.0;
  for (std::int64_t m = n0; m <= n1; ++m) {
    const auto v = static_cast<double>(d[static_cast<std::size_t>(m - 1)]);
    s += v * v * std::pow(static_cast<double>(m), -2.0 * (1.0 - nu));
  }
  return s;
}

double mean_value_check(std::int64_t N, std::span<const double> coeffs,
                        std::span<const double> points) {
  require(N >= 1 && N <= 100'000, ErrorKind::capacity, "mean_value_check: requires 1 <= N <= 1e5");
  require(static_cast<std::int64_t>(coeffs.size()) == N, ErrorKind::input_domain,
          "mean_value_check: need exactly N coefficients for (N, 2N]");
  std::vector<double> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  for (std::size_t i = 1; i < pts.size(); ++i)
    require(pts[i] - pts[i - 1] >= 1.0, ErrorKind::spacing,
            "mean_value_check: points " + fmt(pts[i - 1]) + " and " + fmt(pts[i]) +
                " closer than 1");
  if (pts.empty()) return 0.0;
  double norm = 0.0;
  for (double a : coeffs) norm += a * a;
  require(norm > 0.0, ErrorKind::input_domain, "mean_value_check: all coefficients vanish");
  std::vector<double> full(static_cast<std::size_t>(2 * N), 0.0);
  std::copy(coeffs.begin(), coeffs.end(), full.begin() + N);
  const auto block = DirichletBlock::custom(static_cast<double>(N), static_cast<double>(2 * N),
                                            0.0, std::move(full));
  double s = 0.0;
  for (double t : pts) s += std::norm(zeta_sum(block, t));
  return s / ((static_cast<double>(N) + static_cast<double>(pts.size())) * norm);
}

}  // namespace zdl
