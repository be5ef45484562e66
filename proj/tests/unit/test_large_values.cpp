#include <doctest.h>

#include <cmath>
#include <numbers>

#include "test_support.hpp"
#include "zdl/large_values.hpp"
#include "zdl/reference.hpp"
#include "zdl/zeta.hpp"

using namespace zdl;

namespace {

bool subset(const std::vector<char>& a, const std::vector<char>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

}  // namespace

TEST_SUITE("large_values") {

TEST_CASE("interval sets from marks") {
  const GridSpec g{0.0, 1.0, 10};
  const std::vector<char> m{1, 1, 0, 0, 1, 0, 0, 0, 1, 1};
  const IntervalSet s = interval_set_from_marks(g, m, -0.5, 9.0);
  s.validate();
  REQUIRE(s.intervals.size() == 3);
  CHECK(s.intervals[0].lo == -0.5);
  CHECK(s.intervals[0].hi == 1.5);
  CHECK(s.intervals[1].lo == 3.5);
  CHECK(s.intervals[2].hi == 9.0);
  CHECK(s.measure == doctest::Approx(2.0 + 1.0 + 1.5));
  CHECK(s.marked_points == 5);
  CHECK(s.contains(0.7));
  CHECK(!s.contains(2.0));
  // refinement moves boundaries to the crossings of an exact predicate
  const GridSpec fine{0.0, 0.1, 101};
  std::vector<char> mm(101);
  for (int k = 0; k <= 100; ++k) mm[k] = fine.at(k) >= 2.345 && fine.at(k) <= 7.61;
  const IntervalSet r = interval_set_from_marks(fine, mm, 0, 10, [](double t) { return t >= 2.345 && t <= 7.61; });
  REQUIRE(r.intervals.size() == 1);
  CHECK(std::abs(r.intervals[0].lo - 2.345) <= kRefineTolerance);
  CHECK(std::abs(r.intervals[0].hi - 7.61) <= kRefineTolerance);
}

TEST_CASE("one_spaced_select") {
  const std::vector<double> p{0, 0.5, 1.2, 3};
  CHECK(one_spaced_select(p) == std::vector<std::size_t>{0, 2, 3});
  const std::vector<double> spaced{1, 2, 3.5, 10};
  CHECK(one_spaced_select(spaced).size() == 4);
  const std::vector<double> tight{0.1, 0.2, 0.5, 0.9};
  CHECK(one_spaced_select(tight).size() == 1);
  Rng rng(3);
  std::vector<double> pts(500);
  for (auto& x : pts) x = rng.uniform(0, 100);
  std::sort(pts.begin(), pts.end());
  const auto keep = one_spaced_select(pts);
  for (std::size_t i = 1; i < keep.size(); ++i) CHECK(pts[keep[i]] - pts[keep[i - 1]] >= 1.0);
  for (double x : pts) {
    bool near = false;
    for (auto k : keep) near = near || std::abs(pts[k] - x) <= 1.0;
    CHECK(near);
  }
  const std::vector<double> bad{1, 0};
  CHECK_THROWS_AS(one_spaced_select(bad), Error);
}

TEST_CASE("scan kernels equal the serial reference") {
  for (double T : {300.0, 1000.0}) {
    ScanConfig cfg = ScanConfig::over(T, 0.05);
    cfg.nu = 0.4;
    cfg.eps = 0.25;
    CHECK(theorem_lhs_marks(cfg) == reference::theorem_lhs_marks(0.4, 0.25, T, cfg.grid));
    for (double sigma : {0.5, 0.7}) {
      const auto fast = r_marks(sigma, 0.1, cfg);
      CHECK(fast == reference::r_marks(sigma, 0.1, T, cfg.grid));
    }
  }
}

TEST_CASE("pointwise predicates agree with the marks") {
  ScanConfig cfg = ScanConfig::over(1000, 0.05);
  cfg.nu = 0.4;
  cfg.eps = 0.25;
  const auto lhs = theorem_lhs_marks(cfg);
  const auto R = r_marks(0.6, 0.05, cfg);
  for (std::int64_t k = 0; k < cfg.grid.count; k += 97) {
    const double t = cfg.grid.at(k);
    CHECK((theorem_lhs_hit(0.4, 0.25, 1000, t).has_value()) == (lhs[static_cast<std::size_t>(k)] != 0));
    CHECK(r_mark_at(0.6, 0.05, 1000, t) == (R[static_cast<std::size_t>(k)] != 0));
  }
}

TEST_CASE("monotonicity of the marked sets") {
  ScanConfig cfg = ScanConfig::over(1000, 0.05);
  cfg.eps = 0.25;
  std::vector<char> prev;
  for (double nu : {0.0, 0.1, 0.25, 0.4, 0.5}) {
    cfg.nu = nu;
    const auto m = theorem_lhs_marks(cfg);
    if (!prev.empty()) CHECK(subset(prev, m));
    prev = m;
  }
  prev.clear();
  for (double eta : {0.3, 0.2, 0.1, 0.05, 0.0}) {
    const auto m = r_marks(0.55, eta, cfg);
    if (!prev.empty()) CHECK(subset(prev, m));
    prev = m;
  }
}

TEST_CASE("theorem set near t = 0") {
  ScanConfig cfg = ScanConfig::over(1e4, 0.05);
  cfg.eps = 0.25;
  cfg.nu = 0.4;
  const auto hit = theorem_lhs_hit(0.4, 0.25, 1e4, 0.0);
  CHECK(hit.has_value());
  // nu = 0: the threshold is 1, blocks stay below log 2 + o(1) away from 0
  cfg.nu = 0.0;
  const IntervalSet s = measure_theorem_lhs(cfg);
  for (const auto& iv : s.intervals) CHECK(std::abs(iv.lo) < 1.0);
}

TEST_CASE("grid measure is stable under halving dt") {
  for (double sigma : {0.6, 0.75}) {
    ScanConfig a = ScanConfig::over(1000, 0.05);
    ScanConfig b = ScanConfig::over(1000, 0.025);
    const IntervalSet ma = measure_R(sigma, 0.05, a);
    const IntervalSet mb = measure_R(sigma, 0.05, b);
    const double crossings = 2.0 * static_cast<double>(std::max(ma.intervals.size(), mb.intervals.size()));
    CHECK(std::abs(ma.measure - mb.measure) < 3 * 0.05 * crossings + 1e-12);
    ma.validate();
    mb.validate();
  }
}

TEST_CASE("reduce_to_shifted_line") {
  const WitnessRecord w = reduce_to_shifted_line(0.0, 0.3, 0.1, 100, 200);
  CHECK(w.tag == WitnessTag::lemma21);
  CHECK(w.value >= std::pow(100.0, 0.1) / 4);
  CHECK(w.holds());
  CHECK(std::abs(w.value - std::abs(zeta_sum(DirichletBlock::unit(w.M, w.M_prime, 0.6), 0.0))) < 1e-10);
  const WitnessRecord w0 = reduce_to_shifted_line(0.0, 0.3, 0.0, 100, 200);
  CHECK(w0.threshold == 0.25);
  try {
    reduce_to_shifted_line(777.7, 0.0, 0.1, 100, 200);
    FAIL("hypothesis should fail");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::hypothesis_failure);
  }
  // every hypothesis-satisfying point of a scan reduces
  ScanConfig cfg = ScanConfig::over(1000, 0.05);
  cfg.nu = 0.4;
  cfg.eps = 0.25;
  const auto m = theorem_lhs_marks(cfg);
  int done = 0;
  for (std::int64_t k = 0; k < cfg.grid.count && done < 200; k += 11) {
    if (!m[static_cast<std::size_t>(k)]) continue;
    const double t = cfg.grid.at(k);
    const auto hit = theorem_lhs_hit(0.4, 0.25, 1000, t);
    REQUIRE(hit.has_value());
    const auto r = reduce_to_shifted_line(t, 0.4, 0.125, double(hit->M), double(hit->M_prime));
    CHECK(r.value >= r.threshold);
    ++done;
  }
  CHECK(done > 50);
}

TEST_CASE("afe_reduction") {
  try {
    afe_reduction(500.0, 0.6, 0.9, 0.1, 1000);
    FAIL("hypothesis should fail");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::hypothesis_failure);
  }
  CHECK_THROWS_AS(afe_reduction(3.0, 0.6, 0.1, 0.1, 1000), Error);
  // small beta keeps T^{eps beta/3} near 1, so some large points reduce
  const double T = 1000, beta = 0.01, eps = 0.1;
  int ok = 0, tried = 0;
  for (double t = 7.0; t < 1000 && tried < 400; t += 2.37) {
    const double sigma = 0.5;
    if (std::abs(zeta_reference({sigma, t})) < std::pow(T, beta)) continue;
    ++tried;
    try {
      const AfeReduction r = afe_reduction(t, sigma, beta, eps, T);
      ++ok;
      CHECK(r.witness.value >= r.witness.threshold);
      const double line = sigma + (2 - eps) * beta;
      CHECK(std::abs(std::abs(zeta_sum(DirichletBlock::unit(r.witness.M, r.witness.M_prime, line), t)) -
                     r.witness.value) < 1e-10);
      CHECK(r.witness.M <= std::sqrt(T) / 2);
      // zeta = main + chi dual + AFE error: triangle inequality with the calibrated error
      const AfeResult a = zeta_afe({sigma, t});
      CHECK(r.zeta_abs <= r.afe_majorant + testing::budget("C_afe") * a.error_budget);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::branch_failure);
    }
  }
  CHECK(tried > 100);
  CHECK(ok > 0);
}

TEST_CASE("dichotomy report") {
  ScanConfig cfg = ScanConfig::over(1000, 0.05);
  const DichotomyReport d = dichotomy_report(0.95, 0.2, cfg);
  CHECK(d.R == 0);
  CHECK(d.branch_A);
  CHECK(d.conclusion_holds);
  const DichotomyReport e = dichotomy_report(0.6, 0.05, cfg);
  CHECK(e.conclusion_holds);
  CHECK(e.R >= 0);
}

TEST_CASE("box bound report") {
  const ZeroTable z = find_zeros(2100);
  const BoxBoundReport r = box_bound_report(z, 0.8, 0.05, 1000);
  const double L = std::log(1000.0);
  CHECK(r.box_height == doctest::Approx(L * L / 4));
  // sigma0 = 0.8 - 1/sqrt(log log 1000) < 1/2, so every zero up to 2T counts
  CHECK(r.sigma0 < 0.5);
  CHECK(r.zero_count == 2 * z.count_upto(2000));
  CHECK(r.bound == doctest::Approx(3 * r.box_height * (r.zero_count + 1)));
  CHECK(r.statement_bound >= r.bound);
  CHECK(r.lhs <= r.bound);
  CHECK(r.holds);
  const BoxBoundReport big = box_bound_report(z, 0.9, 0.6, 1000);
  CHECK(big.lhs == 0);
  CHECK(big.holds);
  try {
    box_bound_report(z, 0.8, 0.05, 1500);
    FAIL("beyond horizon");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::horizon);
  }
}

}  // TEST_SUITE
