#pragma once

// Exponent calculus over exact rationals: zero-density profiles pushed
// through the large-value bound, the R_{sigma,eta} recursion and its
// induction, the stronger-density application and the zero-detection
// budget.  T^eps factors live in a separate field, never inside exponents.

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zdl {

using Rational = boost::multiprecision::cpp_rational;

// Exact parse of "0.125", "-3", "1e-4", "7/20".
Rational parse_rational(std::string_view text);
// Exact binary value of a double.
Rational to_rational(double x);
double to_double(const Rational& q);
std::string to_string(const Rational& q);

struct DensityExponentProfile {
  std::string name;
  // (sigma, f(sigma)), sigma strictly ascending; f linear in between.
  std::vector<std::pair<Rational, Rational>> breakpoints;

  const Rational& lo() const { return breakpoints.front().first; }
  const Rational& hi() const { return breakpoints.back().first; }
  // Profile error outside [lo, hi].
  Rational operator()(const Rational& sigma) const;
  // Ascending inside [1/2, 1], ends at (1, 0), nonincreasing, nonnegative.
  void validate() const;

  // f = 2(1 - sigma) on [1/2, 1].
  static DensityExponentProfile DH();
  // f(1 - nu) = (2 - delta) nu for nu in [0, 1/2 - eps]; undefined below.
  static DensityExponentProfile strong_DH(const Rational& delta, const Rational& eps);
  // Lines "sigma value"; '#' comments and blank lines ignored.
  static DensityExponentProfile parse(std::string_view text, std::string name);
  static DensityExponentProfile load(const std::string& path);
};

struct TraceStep {
  std::string rule;
  std::string values;
};

enum class ExponentBranch { zero_term, nu_half_term };
const char* to_string(ExponentBranch b);

struct ExponentReport {
  // max( max_alpha [(alpha - (1-nu))/2 + f(alpha)], nu/2 ), no epsilon.
  Rational exponent;
  Rational argmax_alpha;
  ExponentBranch branch = ExponentBranch::zero_term;
  Rational epsilon_budget;  // the T^eps factor in front
  Rational total;           // exponent + epsilon_budget
  std::vector<TraceStep> trace;
};

ExponentReport rhs_exponent(const Rational& nu, const Rational& eps,
                            const DensityExponentProfile& profile);
// The traced formula recomputed at argmax_alpha.
Rational reevaluate(const ExponentReport& r, const Rational& nu,
                    const DensityExponentProfile& profile);

struct RecursionStep {
  bool terminal = false;  // beta <= eps/3: the zero-count bound applies instead
  Rational sigma_next;
  Rational eta_next;
  Rational cost;  // beta - eta, the exponent of the T^{beta - eta} prefactor
};

RecursionStep recursion_step(const Rational& sigma, const Rational& eta, const Rational& beta,
                             const Rational& eps);

struct InductionFailure {
  long j = 0;
  Rational beta;
  std::string check;
  Rational lhs;
  Rational rhs;
};

struct InductionTrace {
  Rational eps;
  Rational eta;
  Rational step_coefficient;  // c in sigma' = sigma + c beta
  long J = 0;
  long checks = 0;
  std::vector<TraceStep> steps;
  std::vector<InductionFailure> failures;
  bool passed() const { return failures.empty(); }
};

inline constexpr int kInductionBetaPoints = 16;

// Replays the induction over j = 0..J, J = ceil(50/eps), at every beta of a
// grid in (eps/3, 1].  step_coefficient defaults to 2 - eps; other values
// exist for falsification.
InductionTrace induction_verify(const Rational& eps, const Rational& eta);
InductionTrace induction_verify(const Rational& eps, const Rational& eta,
                                const Rational& step_coefficient);

struct StrongDHReport {
  Rational eps;
  Rational beta_pointwise;
  Rational eps0;
  Rational delta;  // delta(eps0)
  Rational eps_prime;
  Rational delta1;
  Rational sigma1_lo;  // eps0
  Rational sigma1_hi;  // 1/2 - 20 eps
  bool interval_empty = false;
  std::vector<TraceStep> checks;
  bool passed = true;
};

StrongDHReport strong_dh_application(const Rational& eps,
                                     const std::function<Rational(const Rational&)>& delta_fn,
                                     const Rational& beta_pointwise);

struct ConverseBudget {
  Rational u1;        // 2 nu + 3 eps/2
  Rational one_spaced;  // 2 nu + 5 eps/4
  Rational total;     // 2 nu + 2 eps
  std::vector<TraceStep> rules;
};

ConverseBudget converse_budget(const Rational& nu, const Rational& eps);

// k = floor(log U / log K') for K' in [R, R T^eps], k = 1 for K' in [U T^-eps, U R].
int moment_power(double U, double K_prime, double R, double T, double eps);

}  // namespace zdl
