#pragma once

// Zero detection through a mollified zeta sum: the coefficients a_n of
// zeta(s) R(s) truncated at U, the dyadic block that must be large at a
// zero, and the reduction of that block to a short unit-coefficient sum on
// the 1-line.  Also the moment and mean-value ingredients of the U1 count.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zdl/large_values.hpp"
#include "zdl/zeros.hpp"

namespace zdl {

struct DetectorConfig {
  double nu = 0.5;
  double eps = 0.3;
  double T = 1e4;
  double U = 200.0;
  // Real part used for the zeros; 1/2 for every zero in the desk range.
  double beta = 0.5;
  // Mollifier length T^{eps^2/2}.
  double R_len() const;
  void validate() const;
};

// a_n = sum_{r | n, r <= R, n/r <= U} mu(r); requires 1 <= n <= U R.
std::int64_t mollified_coeffs(double U, double R, std::int64_t n);

// a_1 .. a_{floor(U R)} by sieving over r (element i holds n = i+1).
std::vector<std::int64_t> mollified_table(double U, double R);

struct DyadicSearch {
  double full_sum = 0.0;      // |sum_{R < n <= UR} a_n n^{-rho}|
  double identity_gap = 0.0;  // |1 + sum_{R<n<=UR} a_n n^{-rho}|, ~0 at a zero
  double K = 0.0;
  int k = 0;
  double block_value = 0.0;
  double threshold = 0.0;     // 1/(4 log T)
  std::vector<double> blocks; // |block| for every dyadic K = 2^k R
};

// Checks the full-sum lower bound 1/2 (identity failure otherwise) and
// returns the first dyadic K whose block reaches 1/(4 log T).
DyadicSearch dyadic_search(double gamma, const DetectorConfig& config);
DyadicSearch dyadic_search_at(double beta, double gamma, const DetectorConfig& config,
                              bool check_identity = true);

struct Classification {
  WitnessRecord witness;
  DyadicSearch search;
  std::int64_t r = 0;
  double ell_block = 0.0;      // |sum_{K/r < l <= min(2K/r, U)} l^{-beta-i gamma}|
  double ell_threshold = 0.0;  // r^{beta-1}/(8 log^2 T)
  std::string route;           // which selection produced (M, M')
  bool verified = false;       // witness re-evaluated and value >= threshold
  std::string diagnostic;
};

// Full pipeline for one zero of the table with |gamma| in [U, 2U].
Classification classify_zero(double gamma, const DetectorConfig& config, const ZeroTable& table);
// Same pipeline at an arbitrary rho = beta + i gamma (synthetic off-line
// vectors); the identity check is optional there.
Classification classify_rho(double beta, double gamma, const DetectorConfig& config,
                            bool check_identity = true);
// Steps after the dyadic search: U1 test, pigeonhole over r, Case 1 / Case 2
// witness.  The first-K rule almost never leaves U1 at desk heights, so the
// case logic is also reachable with an injected search.K.
Classification classify_search(double beta, double gamma, DyadicSearch search,
                               const DetectorConfig& config);

// Fresh evaluation of |sum_{M < l <= M'} l^{-1-i gamma}|.
double witness_value(double gamma, double M, double M_prime);

// sum_{K^k < n <= (2K)^k} d_{2k}(n)^2 / n^{2(1-nu)}
double divisor_moment(int k, double K, double nu);
// d_j(1..N) by repeated convolution with 1 (element i holds n = i+1).
std::vector<std::uint64_t> divisor_counts(int j, std::int64_t N);

// sum_t |sum_{N<n<=2N} a_n n^{-it}|^2 / ((N + #points) sum |a_n|^2);
// coeffs[i] is a_{N+1+i}.
double mean_value_check(std::int64_t N, std::span<const double> coeffs,
                        std::span<const double> points);

struct DetectorRun {
  DetectorConfig config;
  double R = 0.0;
  std::vector<Classification> zeros;
  std::int64_t u1 = 0;
  std::int64_t verified = 0;
  std::int64_t unverified = 0;
  // #U1 / U^{2 nu + 3 eps/2}
  double u1_budget_ratio = 0.0;
};

// Every zero of the table with gamma in [U, 2U].
DetectorRun run_detector(const DetectorConfig& config, const ZeroTable& table);

}  // namespace zdl
