#include "zdl/large_values.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "zdl/error.hpp"
#include "zdl/kernels.hpp"
#include "zdl/zeta.hpp"

namespace zdl {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

// Direct prefix sums S[j] = sum_{lo < n <= lo + j} n^{-sigma-it}.
void direct_prefix(double sigma, double t, std::int64_t lo, std::int64_t hi,
                   std::vector<double>& re, std::vector<double>& im) {
  const auto len = static_cast<std::size_t>(std::max<std::int64_t>(hi - lo, 0));
  re.assign(len + 1, 0.0);
  im.assign(len + 1, 0.0);
  for (std::size_t j = 1; j <= len; ++j) {
    const SplitLog l = split_log(lo + static_cast<std::int64_t>(j));
    const double ph = reduced_phase(t, l);
    const double a = std::exp(-sigma * l.hi);
    re[j] = re[j - 1] + a * std::cos(ph);
    im[j] = im[j - 1] - a * std::sin(ph);
  }
}

std::int64_t sqrt_floor(double T) { return static_cast<std::int64_t>(std::floor(std::sqrt(T))); }

std::int64_t lhs_lo(double T, double eps) {
  return static_cast<std::int64_t>(std::ceil(std::pow(T, eps) - 1e-12));
}
std::int64_t lhs_hi(double T) {
  return static_cast<std::int64_t>(std::floor(std::sqrt(T) / 2.0));
}

// Upper end of the blocks starting at a: real A with floor(A) = a and B <= 2A
// reach b = 2a + 1; the dyadic lattice uses A = a exactly.
std::int64_t r_block_end(std::int64_t a, std::int64_t N, MPolicy policy) {
  return std::min(policy == MPolicy::all_integers ? 2 * a + 1 : 2 * a, N);
}

// Test on prefix sums (index = n) for the R set.
bool r_hit(const double* re, const double* im, std::int64_t N,
           const std::vector<std::int64_t>& starts, double thr2, MPolicy policy) {
  for (std::int64_t a : starts) {
    const std::int64_t bend = r_block_end(a, N, policy);
    const double ar = re[a], ai = im[a];
    for (std::int64_t b = a + 1; b <= bend; ++b) {
      const double dr = re[b] - ar, di = im[b] - ai;
      if (dr * dr + di * di >= thr2) return true;
    }
  }
  return false;
}

// Prefix sums indexed by m - lo.
std::optional<LhsHit> lhs_hit(const double* re, const double* im, std::int64_t lo,
                              const std::vector<std::int64_t>& starts,
                              const std::vector<double>& thr2) {
  for (std::size_t s = 0; s < starts.size(); ++s) {
    const std::int64_t M = starts[s];
    const double ar = re[M - lo], ai = im[M - lo];
    for (std::int64_t Mp = M + 1; Mp <= 2 * M; ++Mp) {
      const double dr = re[Mp - lo] - ar, di = im[Mp - lo] - ai;
      const double v2 = dr * dr + di * di;
      if (v2 >= thr2[s]) return LhsHit{M, Mp, std::sqrt(v2)};
    }
  }
  return std::nullopt;
}

std::vector<double> lhs_thresholds(const std::vector<std::int64_t>& starts, double nu) {
  std::vector<double> thr2;
  thr2.reserve(starts.size());
  for (std::int64_t M : starts) thr2.push_back(std::pow(static_cast<double>(M), -2.0 * nu));
  return thr2;
}

void check_lhs_params(double nu, double eps, double T) {
  require(std::isfinite(nu) && std::isfinite(eps) && std::isfinite(T), ErrorKind::input_domain,
          "theorem LHS: non-finite parameter");
  require(nu >= 0.0 && nu <= 0.5, ErrorKind::domain, "theorem LHS: requires nu in [0, 1/2]");
  require(eps > 0.0, ErrorKind::domain, "theorem LHS: requires eps > 0");
  require(T >= 1.0, ErrorKind::domain, "theorem LHS: requires T >= 1");
}

void check_r_params(double sigma, double eta, double T) {
  require(std::isfinite(sigma) && std::isfinite(eta) && std::isfinite(T),
          ErrorKind::input_domain, "R scan: non-finite parameter");
  require(T >= 1.0, ErrorKind::domain, "R scan: requires T >= 1");
  require(sqrt_floor(T) <= kMaxBlockLength, ErrorKind::capacity,
          "R scan: sqrt(T) exceeds kMaxBlockLength=1e6");
}

}  // namespace

bool IntervalSet::contains(double t) const {
  auto it = std::upper_bound(intervals.begin(), intervals.end(), t,
                             [](double x, const Interval& iv) { return x < iv.lo; });
  if (it == intervals.begin()) return false;
  --it;
  return t <= it->hi;
}

void IntervalSet::validate() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    require(intervals[i].lo < intervals[i].hi, ErrorKind::numerical,
            "IntervalSet: empty or reversed interval");
    if (i > 0)
      require(intervals[i - 1].hi < intervals[i].lo, ErrorKind::numerical,
              "IntervalSet: intervals overlap or touch");
    sum += intervals[i].hi - intervals[i].lo;
  }
  require(std::abs(sum - measure) <= 1e-12 * std::max(1.0, sum), ErrorKind::numerical,
          "IntervalSet: measure does not match interval lengths");
}

IntervalSet interval_set_from_marks(const GridSpec& grid, std::span<const char> marks,
                                    double clip_lo, double clip_hi,
                                    const std::function<bool(double)>& refine) {
  require(static_cast<std::int64_t>(marks.size()) == grid.count, ErrorKind::input_domain,
          "interval_set_from_marks: marks and grid differ in length");
  const double h = grid.dt / 2.0;
  auto crossing = [&](std::int64_t k) {
    // boundary between grid points k and k+1
    double a = grid.at(k), b = grid.at(k + 1);
    if (!refine) return a + h;
    const bool fa = marks[static_cast<std::size_t>(k)] != 0;
    while (b - a > kRefineTolerance) {
      const double m = 0.5 * (a + b);
      if (refine(m) == fa) a = m;
      else b = m;
    }
    return 0.5 * (a + b);
  };
  IntervalSet out;
  std::int64_t boundaries = 0;
  std::int64_t k = 0;
  while (k < grid.count) {
    if (!marks[static_cast<std::size_t>(k)]) {
      ++k;
      continue;
    }
    const std::int64_t k0 = k;
    while (k < grid.count && marks[static_cast<std::size_t>(k)]) ++k;
    const std::int64_t k1 = k - 1;
    out.marked_points += k1 - k0 + 1;
    double lo = k0 == 0 ? grid.at(0) - h : crossing(k0 - 1);
    double hi = k1 == grid.count - 1 ? grid.at(k1) + h : crossing(k1);
    if (lo > clip_lo) ++boundaries;
    if (hi < clip_hi) ++boundaries;
    lo = std::max(lo, clip_lo);
    hi = std::min(hi, clip_hi);
    if (lo < hi) out.intervals.push_back({lo, hi});
  }
  for (const auto& iv : out.intervals) out.measure += iv.hi - iv.lo;
  out.discretization_error =
      static_cast<double>(boundaries) * (refine ? kRefineTolerance : h);
  return out;
}

ScanConfig ScanConfig::over(double T, double dt) {
  require(std::isfinite(T) && std::isfinite(dt) && T > 0.0 && dt > 0.0, ErrorKind::input_domain,
          "ScanConfig: requires finite T > 0 and dt > 0");
  ScanConfig c;
  c.T = T;
  c.grid.t0 = -T;
  c.grid.dt = dt;
  c.grid.count = static_cast<std::int64_t>(std::floor(2.0 * T / dt + 1e-9)) + 1;
  return c;
}

void ScanConfig::validate() const {
  require(std::isfinite(T) && T >= 1.0 && T <= 1e6, ErrorKind::domain,
          "ScanConfig: requires 1 <= T <= 1e6");
  grid.validate();
  const double tol = 1e-9 * std::max(1.0, T);
  require(std::abs(grid.t0 + T) <= tol && grid.last() <= T + tol && grid.last() >= T - grid.dt,
          ErrorKind::domain, "ScanConfig: grid must span [-T, T]");
  require(horizon_C >= 1.0, ErrorKind::domain, "ScanConfig: horizon constant must be >= 1");
}

const char* to_string(WitnessTag tag) {
  switch (tag) {
    case WitnessTag::lemma21: return "lemma21";
    case WitnessTag::lemma24_main: return "lemma24_main";
    case WitnessTag::lemma24_dual: return "lemma24_dual";
    case WitnessTag::case1: return "case1";
    case WitnessTag::case2: return "case2";
    case WitnessTag::U1: return "U1";
  }
  return "?";
}

std::vector<std::int64_t> block_starts(std::int64_t lo, std::int64_t hi, MPolicy policy) {
  std::vector<std::int64_t> out;
  if (lo < 1) lo = 1;
  if (policy == MPolicy::all_integers) {
    for (std::int64_t m = lo; m <= hi; ++m) out.push_back(m);
  } else {
    for (std::int64_t m = lo; m <= hi; m *= 2) out.push_back(m);
  }
  return out;
}

bool r_mark_at(double sigma, double eta, double T, double t, MPolicy policy) {
  check_r_params(sigma, eta, T);
  const std::int64_t N = sqrt_floor(T);
  std::vector<double> re, im;
  direct_prefix(sigma, t, 0, N, re, im);
  const double thr = std::pow(T, eta);
  return r_hit(re.data(), im.data(), N, block_starts(1, N, policy), thr * thr, policy);
}

std::optional<LhsHit> theorem_lhs_hit(double nu, double eps, double T, double t,
                                      MPolicy policy) {
  check_lhs_params(nu, eps, T);
  const std::int64_t lo = lhs_lo(T, eps), hi = lhs_hi(T);
  if (lo > hi) return std::nullopt;
  std::vector<double> re, im;
  direct_prefix(1.0, t, lo, 2 * hi, re, im);
  const auto starts = block_starts(lo, hi, policy);
  return lhs_hit(re.data(), im.data(), lo, starts, lhs_thresholds(starts, nu));
}

std::vector<char> r_marks(double sigma, double eta, const ScanConfig& config) {
  config.validate();
  check_r_params(sigma, eta, config.T);
  const std::int64_t N = sqrt_floor(config.T);
  std::vector<char> marks(static_cast<std::size_t>(config.grid.count), 0);
  if (N < 2) return marks;
  const auto starts = block_starts(1, N, config.M_policy);
  const double thr = std::pow(config.T, eta);
  const double thr2 = thr * thr;
  const MPolicy policy = config.M_policy;
  const auto block = DirichletBlock::unit(0.0, static_cast<double>(N), sigma);
  kernels::scan_terms(block.terms(), config.grid,
                      [&](std::int64_t k, std::span<const double> re, std::span<const double> im) {
                        thread_local std::vector<double> Sr, Si;
                        Sr.resize(static_cast<std::size_t>(N + 1));
                        Si.resize(static_cast<std::size_t>(N + 1));
                        Sr[0] = Si[0] = 0.0;
                        for (std::int64_t n = 1; n <= N; ++n) {
                          Sr[n] = Sr[n - 1] + re[n - 1];
                          Si[n] = Si[n - 1] + im[n - 1];
                        }
                        marks[static_cast<std::size_t>(k)] =
                            r_hit(Sr.data(), Si.data(), N, starts, thr2, policy);
                      });
  return marks;
}

std::vector<char> theorem_lhs_marks(const ScanConfig& config) {
  config.validate();
  check_lhs_params(config.nu, config.eps, config.T);
  std::vector<char> marks(static_cast<std::size_t>(config.grid.count), 0);
  const std::int64_t lo = lhs_lo(config.T, config.eps), hi = lhs_hi(config.T);
  if (lo > hi) return marks;
  const auto starts = block_starts(lo, hi, config.M_policy);
  const auto thr2 = lhs_thresholds(starts, config.nu);
  const auto block = DirichletBlock::unit(static_cast<double>(lo), static_cast<double>(2 * hi), 1.0);
  const std::int64_t len = 2 * hi - lo;
  kernels::scan_terms(block.terms(), config.grid,
                      [&](std::int64_t k, std::span<const double> re, std::span<const double> im) {
                        thread_local std::vector<double> Sr, Si;
                        Sr.resize(static_cast<std::size_t>(len + 1));
                        Si.resize(static_cast<std::size_t>(len + 1));
                        Sr[0] = Si[0] = 0.0;
                        for (std::int64_t j = 1; j <= len; ++j) {
                          Sr[j] = Sr[j - 1] + re[j - 1];
                          Si[j] = Si[j - 1] + im[j - 1];
                        }
                        marks[static_cast<std::size_t>(k)] =
                            lhs_hit(Sr.data(), Si.data(), lo, starts, thr2).has_value();
                      });
  return marks;
}

IntervalSet measure_R(double sigma, double eta, const ScanConfig& config) {
  const auto marks = r_marks(sigma, eta, config);
  std::function<bool(double)> pred;
  if (config.refine) {
    const double T = config.T;
    const MPolicy p = config.M_policy;
    pred = [=](double t) { return r_mark_at(sigma, eta, T, t, p); };
  }
  return interval_set_from_marks(config.grid, marks, -config.T, config.T, pred);
}

IntervalSet measure_theorem_lhs(const ScanConfig& config) {
  const auto marks = theorem_lhs_marks(config);
  std::function<bool(double)> pred;
  if (config.refine) {
    const ScanConfig c = config;
    pred = [c](double t) { return theorem_lhs_hit(c.nu, c.eps, c.T, t, c.M_policy).has_value(); };
  }
  return interval_set_from_marks(config.grid, marks, -config.T, config.T, pred);
}

WitnessRecord reduce_to_shifted_line(double t, double nu, double eta, double M,
                                     double M_prime) {
  require(std::isfinite(t) && std::isfinite(nu) && std::isfinite(eta) && std::isfinite(M) &&
              std::isfinite(M_prime),
          ErrorKind::input_domain, "reduce_to_shifted_line: non-finite argument");
  require(M >= 1.0 && M < M_prime && M_prime <= 2.0 * M, ErrorKind::domain,
          "reduce_to_shifted_line: requires 1 <= M < M' <= 2M");
  require(nu >= 0.0 && nu <= 0.5 && eta >= 0.0, ErrorKind::domain,
          "reduce_to_shifted_line: requires nu in [0, 1/2], eta >= 0");
  const auto block = DirichletBlock::unit(M, M_prime, 1.0);
  const double hyp = std::abs(zeta_sum(block, t));
  const double hyp_thr = std::pow(M, -nu);
  require(hyp >= hyp_thr, ErrorKind::hypothesis_failure,
          "reduce_to_shifted_line: |sum| = " + fmt(hyp) + " below M^-nu = " + fmt(hyp_thr));
  const PrefixMax pm = prefix_max_sum(block.with_sigma(1.0 - nu - eta), t);
  WitnessRecord w;
  w.t_or_gamma = t;
  w.M = M;
  w.M_prime = static_cast<double>(pm.y_star);
  w.value = pm.max_value;
  w.threshold = std::pow(M, eta) / 4.0;
  w.tag = WitnessTag::lemma21;
  require(w.value >= w.threshold, ErrorKind::numerical,
          "reduce_to_shifted_line: shifted prefix " + fmt(w.value) + " below M^eta/4 = " +
              fmt(w.threshold) + " despite the hypothesis");
  return w;
}

AfeReduction afe_reduction(double t, double sigma, double beta, double eps, double T) {
  require(std::isfinite(t) && std::isfinite(sigma) && std::isfinite(beta) &&
              std::isfinite(eps) && std::isfinite(T),
          ErrorKind::input_domain, "afe_reduction: non-finite argument");
  const double at = std::abs(t);
  require(at > 2.0 * std::numbers::pi && at <= T, ErrorKind::domain,
          "afe_reduction: requires |t| in (2 pi, T]");
  require(sigma >= 0.5 && sigma <= 1.0, ErrorKind::domain,
          "afe_reduction: requires sigma in [1/2, 1]");
  require(beta > 0.0 && eps > 0.0, ErrorKind::domain, "afe_reduction: requires beta, eps > 0");
  AfeReduction r;
  r.zeta_abs = std::abs(zeta_reference(Complex(sigma, t)));
  const double Tb = std::pow(T, beta);
  require(r.zeta_abs >= Tb, ErrorKind::hypothesis_failure,
          "afe_reduction: |zeta| = " + fmt(r.zeta_abs) + " below T^beta = " + fmt(Tb));
  r.cutoff = std::sqrt(at / (2.0 * std::numbers::pi));
  r.main_sum = zeta_sum(DirichletBlock::unit(0.0, r.cutoff, sigma), t);
  r.dual_sum = zeta_sum(DirichletBlock::unit(0.0, r.cutoff, 1.0 - sigma), -t);
  r.main_threshold = Tb / 3.0;
  r.dual_threshold = std::pow(T, beta + sigma - 0.5) / 300.0;
  r.afe_majorant =
      std::abs(r.main_sum) + 100.0 * std::pow(at + 1.0, 0.5 - sigma) * std::abs(r.dual_sum);
  WitnessTag tag;
  if (std::abs(r.main_sum) >= r.main_threshold) tag = WitnessTag::lemma24_main;
  else if (std::abs(r.dual_sum) >= r.dual_threshold) tag = WitnessTag::lemma24_dual;
  else
    fail(ErrorKind::branch_failure,
         "afe_reduction: neither branch clears its threshold: |main| = " +
             fmt(std::abs(r.main_sum)) + " < " + fmt(r.main_threshold) + ", |dual| = " +
             fmt(std::abs(r.dual_sum)) + " < " + fmt(r.dual_threshold));
  // Strongest block (M, 2M], M <= T^{1/2}/2, on the shifted line.
  const double line = sigma + (2.0 - eps) * beta;
  const std::int64_t Mmax = lhs_hi(T);
  require(Mmax >= 1, ErrorKind::domain, "afe_reduction: T too small for any block");
  std::vector<double> re, im;
  direct_prefix(line, t, 0, 2 * Mmax, re, im);
  WitnessRecord w;
  w.t_or_gamma = t;
  w.tag = tag;
  w.threshold = std::pow(T, eps * beta / 3.0);
  for (std::int64_t M = 1; M <= Mmax; ++M) {
    const double v = std::hypot(re[2 * M] - re[M], im[2 * M] - im[M]);
    if (v > w.value) {
      w.value = v;
      w.M = static_cast<double>(M);
      w.M_prime = static_cast<double>(2 * M);
    }
  }
  r.witness = w;
  require(w.value >= w.threshold, ErrorKind::branch_failure,
          std::string("afe_reduction: branch ") + to_string(tag) +
              " holds but no block (M, 2M] reaches T^{eps beta/3} = " + fmt(w.threshold) +
              " (best " + fmt(w.value) + " at M = " + fmt(w.M) + ")");
  return r;
}

DichotomyReport dichotomy_report(double sigma, double eta, const ScanConfig& config) {
  require(sigma >= 0.5 && sigma <= 1.0, ErrorKind::domain,
          "dichotomy_report: requires sigma in [1/2, 1]");
  require(eta > 0.0 && eta < 1.0, ErrorKind::domain, "dichotomy_report: requires eta in (0, 1)");
  DichotomyReport rep;
  rep.sigma = sigma;
  rep.eta = eta;
  rep.T = config.T;
  const IntervalSet R = measure_R(sigma, eta, config);
  rep.R = R.measure;
  rep.R_error = R.discretization_error;
  const double T = config.T;
  const double L = std::log(T);
  rep.branch_A_bound = 4.0 * std::pow(T, (1.0 - sigma) / 2.0);
  rep.beta_floor = eta - 3.0 * std::log(L) / L;
  rep.zeta_step = config.grid.dt / 4.0;
  if (rep.R <= rep.branch_A_bound) {
    rep.branch_A = true;
    rep.conclusion_holds = true;
    return rep;
  }
  // |zeta| is even in t on a fixed line: scan (10, 2T] at midpoints, double.
  const double h = rep.zeta_step;
  const double line = sigma + 1.0 / L;
  GridSpec g{10.0 + h / 2.0, h, static_cast<std::int64_t>(std::floor((2.0 * T - 10.0) / h))};
  require(g.count >= 1, ErrorKind::domain, "dichotomy_report: T too small for the zeta scan");
  const auto z = zeta_grid(line, g);
  constexpr int kOffsets = 8;
  const double step = std::log(2.0);
  std::map<std::pair<int, std::int64_t>, std::int64_t> hist;
  for (const Complex& v : z) {
    const double lz = std::log(std::abs(v));
    for (int o = 0; o < kOffsets; ++o) {
      const double base = rep.beta_floor * L + step * o / kOffsets;
      if (lz <= base) continue;
      const auto j = static_cast<std::int64_t>(std::ceil((lz - base) / step)) - 1;
      ++hist[{o, j}];
    }
  }
  for (const auto& [key, count] : hist) {
    LevelSet ls;
    ls.beta = rep.beta_floor + (static_cast<double>(key.first) / kOffsets +
                                static_cast<double>(key.second)) * step / L;
    ls.measure = 2.0 * h * static_cast<double>(count);
    ls.ratio = ls.measure * 50.0 * std::pow(T, ls.beta) * L * L / (rep.R * std::pow(T, eta));
    rep.levels.push_back(ls);
  }
  std::sort(rep.levels.begin(), rep.levels.end(),
            [](const LevelSet& a, const LevelSet& b) { return a.beta < b.beta; });
  for (const auto& ls : rep.levels)
    if (!rep.best || ls.ratio > rep.best->ratio) rep.best = ls;
  rep.conclusion_holds = rep.best && rep.best->ratio >= 1.0;
  return rep;
}

BoxBoundReport box_bound_report(const ZeroTable& table, double sigma, double beta, double T,
                                double dt) {
  require(std::isfinite(sigma) && std::isfinite(beta) && std::isfinite(T) && std::isfinite(dt),
          ErrorKind::input_domain, "box_bound_report: non-finite argument");
  require(T > std::exp(std::exp(1.0)), ErrorKind::domain,
          "box_bound_report: requires T > e^e so that log log T > 1");
  require(2.0 * T <= table.t_max, ErrorKind::horizon,
          "box_bound_report: N(., 2T) needs a table to 2T = " + fmt(2.0 * T) + ", horizon is " +
              fmt(table.t_max));
  require(dt > 0.0, ErrorKind::domain, "box_bound_report: requires dt > 0");
  BoxBoundReport r;
  r.sigma = sigma;
  r.beta = beta;
  r.T = T;
  const double L = std::log(T);
  r.sigma0 = sigma - 1.0 / std::sqrt(std::log(L));
  const ZeroCount c = count_N(table, r.sigma0, 2.0 * T);
  r.zero_count = c.value;
  r.note = c.note;
  r.box_height = L * L / 4.0;
  // proof's box count 3 L (N + 1); the statement rounds this up to (N + 1)(log T)^2
  r.bound = 3.0 * r.box_height * (static_cast<double>(r.zero_count) + 1.0);
  r.statement_bound = (static_cast<double>(r.zero_count) + 1.0) * L * L;
  // Even in t: scan (0, T] at midpoints and double.
  GridSpec g{dt / 2.0, dt, static_cast<std::int64_t>(std::floor(T / dt))};
  const auto z = zeta_grid(sigma, g);
  const double thr = std::pow(T, beta);
  std::vector<char> marks(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) marks[k] = std::abs(z[k]) >= thr;
  const IntervalSet half = interval_set_from_marks(g, marks, 0.0, T);
  r.lhs = 2.0 * half.measure;
  r.lhs_error = 2.0 * half.discretization_error;
  r.holds = r.lhs <= r.bound;
  return r;
}

std::vector<std::size_t> one_spaced_select(std::span<const double> points) {
  for (std::size_t i = 1; i < points.size(); ++i)
    require(points[i - 1] <= points[i], ErrorKind::order_violation,
            "one_spaced_select: points must be ascending");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (keep.empty() || points[i] - points[keep.back()] >= 1.0) keep.push_back(i);
  return keep;
}

TheoremRhs theorem_rhs(const ZeroTable& table, double T, double nu, double eps) {
  TheoremRhs r;
  const double a0 = 1.0 - nu - eps;
  // N(alpha, T) is constant on [a0, 1/2] and zero beyond, so the maximum of
  // the increasing factor sits at the right end of the nonzero piece.
  for (double a : {a0, 0.5}) {
    if (a < a0) continue;
    const auto n = count_N(table, a, T).value;
    const double term = std::pow(T, (a - (1.0 - nu)) / 2.0) * static_cast<double>(n);
    if (term > r.zero_term) {
      r.zero_term = term;
      r.zeros = n;
    }
  }
  r.nu_half = std::pow(T, nu / 2.0);
  r.total = std::pow(T, eps) * std::max(r.zero_term, r.nu_half);
  return r;
}

}  // namespace zdl
