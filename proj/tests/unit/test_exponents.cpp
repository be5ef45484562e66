#include <doctest.h>

#include <cmath>

#include "zdl/calibration.hpp"
#include "zdl/error.hpp"
#include "zdl/exponents.hpp"

using namespace zdl;

namespace {

Rational q(const char* s) { return parse_rational(s); }

// Dense-grid maximization of the same expression, floating point.
double grid_max(double nu, double eps, const DensityExponentProfile& f, double step) {
  const double a0 = 1 - nu - eps;
  double best = -1e300;
  const auto n = static_cast<long>(std::ceil((1 - a0) / step));
  for (long i = 0; i <= n; ++i) {
    const double a = std::min(1.0, a0 + static_cast<double>(i) * step);
    const double g = (a - (1 - nu)) / 2 + to_double(f(to_rational(a)));
    best = std::max(best, g);
  }
  return std::max(best, nu / 2);
}

DensityExponentProfile random_profile(Rng& rng) {
  DensityExponentProfile p;
  p.name = "random";
  const int k = static_cast<int>(rng.integer(1, 6));
  std::vector<Rational> xs{Rational(1, 2), Rational(1)};
  for (int i = 0; i < k; ++i) xs.push_back(Rational(1, 2) + Rational(rng.integer(1, 999), 2000));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  Rational f = Rational(rng.integer(1, 3000), 1000);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i + 1 == xs.size()) f = 0;
    p.breakpoints.push_back({xs[i], f});
    f = f * Rational(rng.integer(0, 1000), 1000);
  }
  p.validate();
  return p;
}

}  // namespace

TEST_SUITE("exponents") {

TEST_CASE("rational parsing is exact") {
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("1e-4") == Rational(1, 10000));
  CHECK(parse_rational("7/20") == Rational(7, 20));
  CHECK(parse_rational("2.5E2") == Rational(250));
  CHECK(to_rational(0.5) == Rational(1, 2));
  CHECK(to_double(to_rational(0.1)) == 0.1);
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
}

TEST_CASE("profiles") {
  const auto dh = DensityExponentProfile::DH();
  CHECK(dh(q("0.5")) == 1);
  CHECK(dh(q("0.7")) == q("0.6"));
  CHECK(dh(1) == 0);
  CHECK_THROWS_AS(dh(q("0.4")), Error);
  const auto sdh = DensityExponentProfile::strong_DH(q("0.2"), q("0.01"));
  // f(1 - nu) = (2 - delta) nu
  CHECK(sdh(q("0.6")) == q("1.8") * q("0.4"));
  CHECK(sdh.lo() == q("0.51"));
  const auto p = DensityExponentProfile::parse("# sigma value\n0.5 1\n\n0.75 0.25\n1 0\n", "file");
  CHECK(p(q("0.625")) == q("0.625"));
  // increasing, ending off zero, outside [1/2, 1]
  CHECK_THROWS_AS(DensityExponentProfile::parse("0.5 1\n0.75 1.5\n1 0\n", "bad"), Error);
  CHECK_THROWS_AS(DensityExponentProfile::parse("0.5 1\n1 0.1\n", "bad"), Error);
  CHECK_THROWS_AS(DensityExponentProfile::parse("0.4 1\n1 0\n", "bad"), Error);
  try {
    DensityExponentProfile::parse("0.5 1\n0.5x 1\n", "bad");
    FAIL("garbage accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::parse);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("density hypothesis gives 2 nu") {
  const auto dh = DensityExponentProfile::DH();
  const auto r = rhs_exponent(q("0.3"), q("0.001"), dh);
  CHECK(r.exponent == q("1203/2000"));
  CHECK(r.total == r.exponent + q("0.001"));
  CHECK(r.epsilon_budget == q("0.001"));
  CHECK(r.argmax_alpha == q("0.699"));
  CHECK(r.branch == ExponentBranch::zero_term);
  for (const char* e : {"1e-2", "1e-3", "1e-4"}) {
    const auto x = rhs_exponent(q("0.3"), q(e), dh);
    // core exponent is 2 nu + 3 eps/2
    CHECK(x.exponent == q("0.6") + 3 * q(e) / 2);
    CHECK(abs(x.exponent - q("0.6")) <= 2 * q(e));
  }
}

TEST_CASE("nu = 0 is eps-order") {
  const auto r = rhs_exponent(0, q("0.01"), DensityExponentProfile::DH());
  CHECK(r.exponent <= q("0.02"));
  CHECK(r.exponent >= 0);
}

TEST_CASE("strong density hypothesis against a dense grid") {
  const auto sdh = DensityExponentProfile::strong_DH(q("0.2"), q("0.01"));
  const auto r = rhs_exponent(q("0.4"), q("0.01"), sdh);
  CHECK(std::abs(to_double(r.exponent) - grid_max(0.4, 0.01, sdh, 1e-5)) < 1e-9);
  CHECK(reevaluate(r, q("0.4"), sdh) == r.exponent);
  // the conjecture's range stops at 1/2 + eps
  try {
    rhs_exponent(q("0.48"), q("0.02"), sdh);
    FAIL("domain gap accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::profile);
  }
}

TEST_CASE("vertex maximum equals the dense grid on random profiles") {
  Rng rng(31);
  for (int i = 0; i < 60; ++i) {
    const auto p = random_profile(rng);
    const Rational nu(rng.integer(0, 500), 1000);
    const Rational eps(rng.integer(1, 100), 1000);
    if (1 - nu - eps < p.lo()) continue;
    const auto r = rhs_exponent(nu, eps, p);
    CHECK(std::abs(to_double(r.exponent) - grid_max(to_double(nu), to_double(eps), p, 1e-5)) < 1e-9);
    CHECK(reevaluate(r, nu, p) == r.exponent);
  }
}

TEST_CASE("monotone in nu and eps") {
  const auto dh = DensityExponentProfile::DH();
  Rational prev = -1;
  // nu <= 1/2 - eps keeps 1 - nu - eps inside the profile
  for (int k = 0; k <= 49; ++k) {
    const auto r = rhs_exponent(Rational(k, 100), q("0.01"), dh);
    CHECK(r.total >= prev);
    prev = r.total;
  }
  prev = -1;
  for (int k = 1; k <= 40; ++k) {
    const auto r = rhs_exponent(q("0.3"), Rational(k, 1000), dh);
    CHECK(r.total >= prev);
    prev = r.total;
  }
}

TEST_CASE("zero-free profile gives nu/2 + eps") {
  DensityExponentProfile p;
  p.name = "zero-free near 1";
  p.breakpoints = {{Rational(1, 2), Rational(1)}, {q("0.6"), Rational(0)}, {Rational(1), Rational(0)}};
  const auto r = rhs_exponent(q("0.2"), q("0.05"), p);
  CHECK(r.exponent == q("0.1"));
  CHECK(r.total == q("0.15"));
}

TEST_CASE("recursion step") {
  const auto s = recursion_step(q("0.5"), q("0.05"), q("0.25"), q("0.1"));
  CHECK(!s.terminal);
  CHECK(s.sigma_next == q("0.975"));
  CHECK(s.eta_next == q("0.1") * q("0.25") / 4);
  CHECK(s.cost == q("0.2"));
  CHECK(recursion_step(q("0.5"), q("0.05"), q("0.1") / 3, q("0.1")).terminal);
  // chained: from sigma_j = 1 - j/(2J) a step with beta >= eps/3 reaches sigma_{j-1}
  const Rational eps = q("0.1");
  const long J = 500;  // ceil(50/eps)
  for (long j = 1; j <= J; j += 37) {
    const Rational sj = 1 - Rational(j, 2 * J);
    const auto st = recursion_step(sj, q("0.01"), eps / 3 + Rational(1, 1000000), eps);
    CHECK(st.sigma_next >= 1 - Rational(j - 1, 2 * J));
  }
}

TEST_CASE("induction replay") {
  const auto tr = induction_verify(q("0.1"), q("0.05"));
  CHECK(tr.passed());
  CHECK(tr.J == 500);
  CHECK(tr.checks > 500 * kInductionBetaPoints);
  // a transcription error in the step is caught
  const auto bad = induction_verify(q("0.1"), q("0.05"), 2 + q("0.1"));
  CHECK(!bad.passed());
  CHECK(bad.failures.front().check == "block_threshold");
  const auto c1 = induction_verify(q("0.1"), q("0.05"), 1 - q("0.1"));
  CHECK(!c1.passed());
  bool exponent_failed = false;
  for (const auto& f : c1.failures) exponent_failed = exponent_failed || f.check == "exponent";
  CHECK(exponent_failed);
  for (const char* e : {"0.0195", "0.1", "0.1995"})
    for (const char* h : {"0.0195", "0.1", "0.1995"}) CHECK(induction_verify(q(e), q(h)).passed());
  CHECK_THROWS_AS(induction_verify(q("0.3"), q("0.1")), Error);
}

TEST_CASE("stronger density application") {
  const auto r = strong_dh_application(q("0.1"), [](const Rational&) { return q("0.1"); }, q("0.5"));
  CHECK(r.eps0 == q("0.0025"));
  CHECK(r.eps_prime == q("0.0025") * q("0.1") / 6);
  CHECK(r.delta1 == q("0.000125"));
  CHECK(r.delta1 == r.delta * r.eps0 / 2);
  CHECK(r.passed);
  const auto z = strong_dh_application(q("0.01"), [](const Rational&) { return Rational(0); }, q("0.5"));
  CHECK(z.delta1 == 0);
  CHECK(!z.interval_empty);
  CHECK(z.passed);
  const auto s = strong_dh_application(q("0.01"), [](const Rational& e) { return 40 * e; }, q("0.3"));
  CHECK(s.delta == 40 * s.eps0);
  CHECK(s.passed);
  try {
    strong_dh_application(q("0.1"), [](const Rational&) { return q("-0.1"); }, q("0.5"));
    FAIL("negative delta accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::branch_failure);
  }
}

TEST_CASE("converse budget") {
  const auto b = converse_budget(q("0.5"), q("0.2"));
  CHECK(b.u1 == q("1.3"));
  CHECK(b.one_spaced == q("1.25"));
  CHECK(b.total == q("1.4"));
  for (const char* e : {"0.1", "0.01", "0.0001"}) {
    const auto x = converse_budget(q("0.4"), q(e));
    CHECK(x.one_spaced <= x.u1);
    CHECK(x.u1 <= x.total);
    CHECK(x.total - q("0.8") == 2 * q(e));
  }
  CHECK(moment_power(1e4, 3.0, 1.5, 1e4, 0.3) == static_cast<int>(std::floor(std::log(1e4) / std::log(3.0))));
  CHECK(moment_power(1e4, 5000, 1.5, 1e4, 0.3) == 1);
  CHECK_THROWS_AS(moment_power(1e6, 500, 1.5, 1e4, 0.3), Error);
}

}  // TEST_SUITE
