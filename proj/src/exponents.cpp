#include "zdl/exponents.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "zdl/error.hpp"

namespace zdl {

namespace {

using boost::multiprecision::cpp_int;

Rational pow10(long e) {
  cpp_int p = 1;
  for (long i = 0; i < std::abs(e); ++i) p *= 10;
  return e >= 0 ? Rational(p) : Rational(cpp_int(1), p);
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  cpp_int digits = 0;
  long scale = 0;
  bool any = false, dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = digits * 10 + (c - '0');
      if (dot) --scale;
      any = true;
    } else if (c == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
  }
  require(any, ErrorKind::parse, "not a number: '" + std::string(whole) + "'");
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = s[i++] == '-';
    long e = 0;
    bool edig = false;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
      e = e * 10 + (s[i] - '0');
      edig = true;
      require(e < 100000, ErrorKind::parse, "exponent too large: '" + std::string(whole) + "'");
    }
    require(edig, ErrorKind::parse, "bad exponent: '" + std::string(whole) + "'");
    scale += eneg ? -e : e;
  }
  require(i == s.size(), ErrorKind::parse, "trailing characters: '" + std::string(whole) + "'");
  Rational q = Rational(digits) * pow10(scale);
  return neg ? Rational(-q) : q;
}

std::string show(const Rational& q) {
  std::ostringstream os;
  os.precision(12);
  os << to_string(q);
  if (denominator(q) != 1) os << " (~" << to_double(q) << ")";
  return os.str();
}

const Rational kHalf(1, 2);

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  require(!text.empty(), ErrorKind::parse, "empty number");
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text, text);
  Rational p = parse_decimal(text.substr(0, slash), text);
  Rational q = parse_decimal(text.substr(slash + 1), text);
  require(q != 0, ErrorKind::parse, "zero denominator: '" + std::string(text) + "'");
  return p / q;
}

Rational to_rational(double x) {
  require(std::isfinite(x), ErrorKind::input_domain, "non-finite value has no rational form");
  if (x == 0.0) return Rational(0);
  int e = 0;
  double m = std::frexp(x, &e);  // x = m 2^e, |m| in [1/2, 1)
  auto mant = static_cast<long long>(std::ldexp(m, 53));
  e -= 53;
  cpp_int num = mant;
  cpp_int p2 = 1;
  p2 <<= std::abs(e);
  return e >= 0 ? Rational(num * p2) : Rational(num, p2);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// ---------------------------------------------------------------- profiles

Rational DensityExponentProfile::operator()(const Rational& sigma) const {
  require(!breakpoints.empty(), ErrorKind::profile, "empty profile '" + name + "'");
  if (sigma < lo() || sigma > hi())
    fail(ErrorKind::profile, "profile '" + name + "' undefined at sigma = " + show(sigma) +
                                 ", domain [" + show(lo()) + ", " + show(hi()) + "]");
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    const auto& [s0, f0] = breakpoints[i - 1];
    const auto& [s1, f1] = breakpoints[i];
    if (sigma <= s1) return f0 + (f1 - f0) * (sigma - s0) / (s1 - s0);
  }
  return breakpoints.back().second;  // single point domain
}

void DensityExponentProfile::validate() const {
  require(!breakpoints.empty(), ErrorKind::profile, "empty profile '" + name + "'");
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    const auto& [s, f] = breakpoints[i];
    require(s >= kHalf && s <= 1, ErrorKind::profile,
            "profile '" + name + "': sigma " + show(s) + " outside [1/2, 1]");
    require(f >= 0, ErrorKind::profile, "profile '" + name + "': negative value at " + show(s));
    if (i > 0) {
      require(s > breakpoints[i - 1].first, ErrorKind::profile,
              "profile '" + name + "': sigma not strictly ascending at " + show(s));
      require(f <= breakpoints[i - 1].second, ErrorKind::profile,
              "profile '" + name + "': increasing at " + show(s));
    }
  }
  require(hi() == 1 && breakpoints.back().second == 0, ErrorKind::profile,
          "profile '" + name + "': must end at f(1) = 0");
}

DensityExponentProfile DensityExponentProfile::DH() {
  return {"DH", {{kHalf, Rational(1)}, {Rational(1), Rational(0)}}};
}

DensityExponentProfile DensityExponentProfile::strong_DH(const Rational& delta,
                                                         const Rational& eps) {
  require(delta >= 0 && delta < 1, ErrorKind::profile, "STRONG_DH needs delta in [0, 1)");
  require(eps > 0 && eps < kHalf, ErrorKind::profile, "STRONG_DH needs eps in (0, 1/2)");
  Rational s0 = kHalf + eps;
  DensityExponentProfile p;
  p.name = "STRONG_DH(" + to_string(delta) + "," + to_string(eps) + ")";
  p.breakpoints = {{s0, (2 - delta) * (1 - s0)}, {Rational(1), Rational(0)}};
  return p;
}

DensityExponentProfile DensityExponentProfile::parse(std::string_view text, std::string name) {
  DensityExponentProfile p;
  p.name = std::move(name);
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a)) continue;
    if (!(ls >> b) || (ls >> extra))
      fail(ErrorKind::parse, "profile line " + std::to_string(lineno) + ": expected 'sigma value'");
    try {
      p.breakpoints.emplace_back(parse_rational(a), parse_rational(b));
    } catch (const Error& e) {
      fail(e.kind(), "profile line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  p.validate();
  return p;
}

DensityExponentProfile DensityExponentProfile::load(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::io, "cannot open profile '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

// ------------------------------------------------------------ rhs exponent

const char* to_string(ExponentBranch b) {
  return b == ExponentBranch::zero_term ? "zero_term" : "nu_half_term";
}

namespace {

Rational max_term(const Rational& alpha, const Rational& nu, const DensityExponentProfile& f) {
  return (alpha - (1 - nu)) / 2 + f(alpha);
}

}  // namespace

ExponentReport rhs_exponent(const Rational& nu, const Rational& eps,
                            const DensityExponentProfile& profile) {
  require(nu >= 0 && nu <= kHalf, ErrorKind::input_domain, "nu must lie in [0, 1/2]");
  require(eps > 0, ErrorKind::input_domain, "eps must be positive");
  profile.validate();
  Rational a0 = 1 - nu - eps;
  if (a0 < profile.lo())
    fail(ErrorKind::profile, "profile '" + profile.name + "' undefined on [" + show(a0) + ", " +
                                 show(profile.lo()) + "), needed for alpha >= 1 - nu - eps");

  ExponentReport r;
  r.trace.push_back({"alpha_range", "[" + show(a0) + ", 1]"});
  // Piecewise linear: the maximum sits at an endpoint or a breakpoint.
  std::vector<Rational> cand{a0};
  for (const auto& bp : profile.breakpoints)
    if (bp.first > a0 && bp.first < 1) cand.push_back(bp.first);
  cand.emplace_back(1);
  bool first = true;
  Rational best;
  for (const auto& a : cand) {
    Rational g = max_term(a, nu, profile);
    r.trace.push_back({"vertex", "alpha=" + show(a) + " f=" + show(profile(a)) + " term=" + show(g)});
    if (first || g > best) {
      best = g;
      r.argmax_alpha = a;
      first = false;
    }
  }
  Rational half_nu = nu / 2;
  r.trace.push_back({"max_term", "alpha*=" + show(r.argmax_alpha) + " value=" + show(best)});
  r.trace.push_back({"nu_half", show(half_nu)});
  if (best >= half_nu) {
    r.exponent = best;
    r.branch = ExponentBranch::zero_term;
  } else {
    r.exponent = half_nu;
    r.branch = ExponentBranch::nu_half_term;
  }
  r.epsilon_budget = eps;
  r.total = r.exponent + eps;
  r.trace.push_back({"exponent", show(r.exponent) + " branch=" + to_string(r.branch)});
  r.trace.push_back({"epsilon_budget", show(eps)});
  r.trace.push_back({"total", show(r.total)});
  return r;
}

Rational reevaluate(const ExponentReport& r, const Rational& nu,
                    const DensityExponentProfile& profile) {
  Rational g = max_term(r.argmax_alpha, nu, profile);
  return r.branch == ExponentBranch::zero_term ? g : Rational(nu / 2);
}

// --------------------------------------------------------------- recursion

RecursionStep recursion_step(const Rational& sigma, const Rational& eta, const Rational& beta,
                             const Rational& eps) {
  require(sigma >= kHalf && sigma <= 1, ErrorKind::input_domain, "sigma must lie in [1/2, 1]");
  require(eta > 0, ErrorKind::input_domain, "eta must be positive");
  require(eps > 0, ErrorKind::input_domain, "eps must be positive");
  require(beta >= 0, ErrorKind::input_domain, "beta must be nonnegative");
  RecursionStep s;
  if (beta <= eps / 3) {
    s.terminal = true;
    return s;
  }
  s.sigma_next = sigma + (2 - eps) * beta;
  s.eta_next = eps * beta / 4;
  s.cost = beta - eta;
  return s;
}

InductionTrace induction_verify(const Rational& eps, const Rational& eta) {
  return induction_verify(eps, eta, 2 - eps);
}

InductionTrace induction_verify(const Rational& eps, const Rational& eta, const Rational& c) {
  require(eps > 0 && eps < Rational(1, 4), ErrorKind::input_domain, "eps must lie in (0, 1/4)");
  require(eta > 0 && eta < Rational(1, 4), ErrorKind::input_domain, "eta must lie in (0, 1/4)");
  InductionTrace tr;
  tr.eps = eps;
  tr.eta = eta;
  tr.step_coefficient = c;
  // J = ceil((1/2) / (eps/100)) = ceil(50/eps)
  Rational q = Rational(50) / eps;
  cpp_int J = numerator(q) / denominator(q);
  if (Rational(J) < q) ++J;
  require(J <= 1000000, ErrorKind::capacity, "eps too small for the replay");
  tr.J = J.convert_to<long>();

  auto check = [&](long j, const Rational& beta, const char* name, const Rational& lhs,
                   const Rational& rhs) {
    ++tr.checks;
    if (lhs > rhs) tr.failures.push_back({j, beta, name, lhs, rhs});
  };

  const Rational w = kHalf + eps;  // claim slope in (1 - sigma)
  const Rational third = eps / 3;
  std::vector<Rational> betas;
  for (int i = 1; i <= kInductionBetaPoints; ++i)
    betas.push_back(third + (1 - third) * i / kInductionBetaPoints);

  tr.steps.push_back({"J", std::to_string(tr.J)});
  tr.steps.push_back({"base", "j=0: sigma_0 = 1, R empty, claim vacuous"});
  // eta_{j-1} = eta_j eps/20 against eta' = eps beta/4; with eta_j < 1/4 and
  // beta >= eps/3 only the ratio form matters at exponent level.
  check(0, third, "eta_step", eps / 20, eps / 8);
  // Constant bookkeeping: 50 * 4 * 1000^{j-1} <= 1000^j / 4.
  check(0, Rational(0), "constants", Rational(50 * 4), Rational(1000, 4));

  for (long j = 1; j <= tr.J; ++j) {
    Rational sj = 1 - Rational(j, 2 * tr.J);
    Rational sprev = 1 - Rational(j - 1, 2 * tr.J);
    Rational claim = (1 - sj) * w + eps / 2;
    for (const auto& b : betas) {
      Rational snext = sj + c * b;
      // the shifted block T^beta M^{-c beta}, M <= T^{1/2}, must still clear T^{eps beta/3}
      check(j, b, "block_threshold", eps * b / 3, b - c * b / 2);
      // the step lands at or beyond sigma_{j-1}, where the claim is known
      check(j, b, "sigma_step", sprev, snext);
      // T^{beta} * T^{(1 - sigma')(1/2+eps) + eps/2} against the claim for sigma_j
      Rational inner = (1 - snext) * w + eps / 2;
      check(j, b, "exponent", b + inner, claim);
      // (4T)^e <= 4 T^e needs e <= 1
      check(j, b, "horizon", inner, Rational(1));
    }
    check(j, Rational(0), "log_powers", Rational(4 * (j - 1) + 2), Rational(4 * j));
    // terminal beta <= eps/3: the (1-sigma)/2 zero-count term is inside the claim
    check(j, third, "tail", (1 - sj) / 2, claim);
    check(j, third, "terminal", third, eps / 2);
  }
  // The claim at sigma = 1/2 + ..: (alpha - sigma)(1/2 + eps) + eps/2 within
  // (alpha - sigma)/2 + 2 eps for alpha - sigma <= 1/2.
  Rational span = kHalf;
  check(tr.J, Rational(0), "final", span * w + eps / 2, span / 2 + 2 * eps);
  check(tr.J, Rational(0), "reach", Rational(1) - Rational(tr.J, 2 * tr.J), kHalf);

  tr.steps.push_back({"steps", "j=1.." + std::to_string(tr.J) + " x " +
                                   std::to_string(kInductionBetaPoints) + " beta"});
  tr.steps.push_back({"checks", std::to_string(tr.checks)});
  tr.steps.push_back({"failures", std::to_string(tr.failures.size())});
  tr.steps.push_back({"conclusion", "R_{sigma,eta} << T^{(1-sigma)(1/2+eps)+eps/2}, final (alpha-sigma)/2 + 2eps"});
  return tr;
}

// --------------------------------------------------------------- strong DH

StrongDHReport strong_dh_application(const Rational& eps,
                                     const std::function<Rational(const Rational&)>& delta_fn,
                                     const Rational& beta_pointwise) {
  require(eps > 0, ErrorKind::input_domain, "eps must be positive");
  require(beta_pointwise > 0 && beta_pointwise < 1, ErrorKind::input_domain,
          "beta_pointwise must lie in (0, 1)");
  StrongDHReport r;
  r.eps = eps;
  r.beta_pointwise = beta_pointwise;
  r.eps0 = beta_pointwise * eps * eps / 2;
  r.delta = delta_fn(r.eps0);
  if (r.delta < 0 || r.delta >= 1)
    fail(ErrorKind::branch_failure, "delta(eps0) = " + show(r.delta) + " outside [0, 1)");
  r.eps_prime = r.eps0 * r.delta / 6;
  r.delta1 = r.delta * r.eps0 / 2;
  r.sigma1_lo = r.eps0;
  r.sigma1_hi = kHalf - 20 * eps;
  r.interval_empty = r.sigma1_lo > r.sigma1_hi;

  auto add = [&](const std::string& rule, const Rational& lhs, const Rational& rhs, bool strict) {
    bool ok = strict ? lhs < rhs : lhs <= rhs;
    r.checks.push_back({rule, show(lhs) + (strict ? " < " : " <= ") + show(rhs) +
                                  (ok ? " ok" : " FAIL")});
    r.passed = r.passed && ok;
  };

  // 3 eps' - delta eps0 = -delta1 is the symbolic core of branch 1.
  add("delta1_identity", 3 * r.eps_prime - r.delta * r.eps0, -r.delta1, false);
  add("delta1_identity_rev", -r.delta1, 3 * r.eps_prime - r.delta * r.eps0, false);
  // alpha -> (alpha - (1-sigma1))/2 + (2-delta)(1-alpha) decreases: max at the left end
  add("argmax_left_end", Rational(1, 2), 2 - r.delta, true);
  add("range", r.eps_prime + r.eps0, 20 * eps, true);
  if (r.interval_empty) {
    r.checks.push_back({"sigma1_interval", "[" + show(r.sigma1_lo) + ", " + show(r.sigma1_hi) +
                                               "] empty, branch checks vacuous"});
    return r;
  }
  for (const Rational& s1 : {r.sigma1_lo, r.sigma1_hi}) {
    std::string at = " sigma1=" + show(s1);
    Rational astar = 1 - s1 - r.eps_prime;
    Rational val = r.eps_prime + (astar - (1 - s1)) / 2 + (2 - r.delta) * (1 - astar);
    Rational b1 = 2 * s1 + 3 * r.eps_prime - r.delta * r.eps0;
    Rational b2 = 2 * s1 - 3 * r.eps0 / 2 + r.eps_prime;
    Rational target = 2 * s1 - r.delta1;
    add("conjecture_range" + at, s1 + r.eps_prime, kHalf - r.eps0, true);
    add("alpha_star_value" + at, val, b1, false);
    add("second_term" + at, s1 / 2 + r.eps_prime, b2, false);
    add("branch1" + at, b1, target, false);
    add("branch2" + at, b2, target, false);
  }
  return r;
}

// ------------------------------------------------------------------ budget

ConverseBudget converse_budget(const Rational& nu, const Rational& eps) {
  require(nu > 0 && nu <= kHalf, ErrorKind::input_domain, "nu must lie in (0, 1/2]");
  require(eps > 0, ErrorKind::input_domain, "eps must be positive");
  ConverseBudget b;
  b.u1 = 2 * nu + 3 * eps / 2;
  b.one_spaced = 2 * nu + 5 * eps / 4;
  b.total = 2 * nu + 2 * eps;
  b.rules.push_back({"U1", "#U1 << T^{" + show(b.u1) + "}"});
  b.rules.push_back({"one_spaced", "T^{" + show(b.one_spaced) + "}"});
  b.rules.push_back({"T1", "T^{" + show(b.total) + "}"});
  b.rules.push_back({"k_small", "K' in [R, R T^eps]: k = floor(log U / log K')"});
  b.rules.push_back({"k_large", "K' in [U T^-eps, U R]: k = 1"});
  return b;
}

int moment_power(double U, double K_prime, double R, double T, double eps) {
  require(U > 1 && K_prime > 1 && R >= 1 && T > 1 && eps > 0, ErrorKind::input_domain,
          "moment_power needs U, K' > 1, R >= 1, T > 1, eps > 0");
  const double te = std::pow(T, eps);
  if (K_prime >= R && K_prime <= R * te) return static_cast<int>(std::floor(std::log(U) / std::log(K_prime)));
  if (K_prime >= U / te && K_prime <= U * R) return 1;
  fail(ErrorKind::domain, "K' outside both moment ranges");
}

}  // namespace zdl
