#pragma once

// Large-value sets of zeta sums over t-grids: the R_{sigma,eta}(T) set, the
// set on the left of the main theorem, and the reductions between them run
// as procedures that return checkable witnesses.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zdl/eval.hpp"
#include "zdl/zeros.hpp"

namespace zdl {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct IntervalSet {
  std::vector<Interval> intervals;
  double measure = 0.0;
  // Bound on |measure - true measure| from the grid resolution; boundary
  // points only, thin excursions between grid points are not covered.
  double discretization_error = 0.0;
  std::int64_t marked_points = 0;

  bool contains(double t) const;
  bool empty() const { return intervals.empty(); }
  // Checks ordering, disjointness and the measure sum.
  void validate() const;
};

inline constexpr double kRefineTolerance = 1e-4;

// Marked grid point t_k covers [t_k - dt/2, t_k + dt/2], clipped to
// [clip_lo, clip_hi]; runs of marked points merge.  With a predicate each
// boundary is moved to the crossing found by bisection to kRefineTolerance.
IntervalSet interval_set_from_marks(const GridSpec& grid, std::span<const char> marks,
                                    double clip_lo, double clip_hi,
                                    const std::function<bool(double)>& refine = {});

enum class MPolicy { all_integers, dyadic_refined };

struct ScanConfig {
  double T = 0.0;
  GridSpec grid;
  double eps = 0.0;
  double nu = 0.0;
  double sigma = 0.0;
  double eta = 0.0;
  MPolicy M_policy = MPolicy::all_integers;
  bool refine = false;
  // C in N(alpha, C T); the proof's horizon is 4^j T, we expose 4.
  double horizon_C = 4.0;

  // Grid t_k = -T + k dt covering [-T, T].
  static ScanConfig over(double T, double dt);
  void validate() const;
};

enum class WitnessTag { lemma21, lemma24_main, lemma24_dual, case1, case2, U1 };
const char* to_string(WitnessTag tag);

struct WitnessRecord {
  double t_or_gamma = 0.0;
  double M = 0.0;
  double M_prime = 0.0;
  double value = 0.0;
  double threshold = 0.0;
  WitnessTag tag = WitnessTag::U1;

  bool holds() const { return tag == WitnessTag::U1 || value >= threshold; }
};

// Block starts used by the scans: every integer in [lo, hi], or the
// lattice lo * 2^k.
std::vector<std::int64_t> block_starts(std::int64_t lo, std::int64_t hi, MPolicy policy);

// Pointwise predicates behind the two scans (direct evaluation).
bool r_mark_at(double sigma, double eta, double T, double t,
               MPolicy policy = MPolicy::all_integers);

struct LhsHit {
  std::int64_t M = 0;
  std::int64_t M_prime = 0;
  double value = 0.0;
};

// First (M, M') in scan order with |sum_{M<m<=M'} m^{-1-it}| >= M^{-nu}.
std::optional<LhsHit> theorem_lhs_hit(double nu, double eps, double T, double t,
                                      MPolicy policy = MPolicy::all_integers);

// Marks only; the interval sets below are built from these.
std::vector<char> r_marks(double sigma, double eta, const ScanConfig& config);
std::vector<char> theorem_lhs_marks(const ScanConfig& config);

IntervalSet measure_R(double sigma, double eta, const ScanConfig& config);
IntervalSet measure_theorem_lhs(const ScanConfig& config);

// Shift from line 1 to line 1 - nu - eta inside (M, M'].
WitnessRecord reduce_to_shifted_line(double t, double nu, double eta, double M,
                                     double M_prime);

struct AfeReduction {
  WitnessRecord witness;
  Complex main_sum;
  Complex dual_sum;
  double cutoff = 0.0;
  double main_threshold = 0.0;
  double dual_threshold = 0.0;
  double zeta_abs = 0.0;
  // |main| + 100 (|t|+1)^{1/2-sigma} |dual|
  double afe_majorant = 0.0;
};

AfeReduction afe_reduction(double t, double sigma, double beta, double eps, double T);

struct LevelSet {
  double beta = 0.0;
  double measure = 0.0;
  double ratio = 0.0;
};

struct DichotomyReport {
  double sigma = 0.0;
  double eta = 0.0;
  double T = 0.0;
  double R = 0.0;
  double R_error = 0.0;
  double branch_A_bound = 0.0;
  bool branch_A = false;
  double beta_floor = 0.0;
  double zeta_step = 0.0;
  std::vector<LevelSet> levels;
  std::optional<LevelSet> best;
  // The lemma's conclusion: branch A or some beta >= beta_floor with ratio >= 1.
  bool conclusion_holds = false;
};

DichotomyReport dichotomy_report(double sigma, double eta, const ScanConfig& config);

struct BoxBoundReport {
  double sigma = 0.0;
  double beta = 0.0;
  double T = 0.0;
  double lhs = 0.0;
  double lhs_error = 0.0;
  double sigma0 = 0.0;
  std::int64_t zero_count = 0;
  double box_height = 0.0;
  double bound = 0.0;            // 3 L (N + 1), L = box_height
  double statement_bound = 0.0;  // (N + 1)(log T)^2
  bool holds = false;
  std::string note;
};

BoxBoundReport box_bound_report(const ZeroTable& table, double sigma, double beta, double T,
                                double dt = 0.05);

// Right side of the main theorem with C = 1 and the true zero count:
// T^eps max( max_alpha T^{(alpha-(1-nu))/2} N(alpha, T), T^{nu/2} ).
struct TheoremRhs {
  std::int64_t zeros = 0;
  double zero_term = 0.0;
  double nu_half = 0.0;
  double total = 0.0;
};

TheoremRhs theorem_rhs(const ZeroTable& table, double T, double nu, double eps);

// Greedy left-to-right: keep a point iff it is >= 1 from the last kept one.
std::vector<std::size_t> one_spaced_select(std::span<const double> points);

}  // namespace zdl
