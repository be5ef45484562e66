#pragma once

// Dirichlet blocks sum_{A<n<=B} c_n n^{-(sigma+it)}: pointwise evaluation,
// prefix maxima, multi-evaluation over equispaced t-grids and the sieves
// that supply Moebius / von Mangoldt coefficients.

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "zdl/error.hpp"

namespace zdl {

using Complex = std::complex<double>;

// Equispaced ordinates t0 + k*dt, 0 <= k < count.
struct GridSpec {
  double t0 = 0.0;
  double dt = 1.0;
  std::int64_t count = 1;

  double at(std::int64_t k) const { return t0 + static_cast<double>(k) * dt; }
  // The exact grid point t0 + k dt as at(k) + rounding error.  At |t| ~ 1e5
  // the rounding alone moves a long sum by more than 1e-9.
  std::pair<double, double> at_split(std::int64_t k) const;
  double last() const { return at(count - 1); }
  void validate() const;
};

enum class CoeffKind { unit, moebius, von_mangoldt, custom };

// Natural logarithm of n split as hi + lo with |lo| <= ulp(hi)/2, accurate
// to roughly 1e-32 relative.  Drives the phase reduction below.
struct SplitLog {
  double hi = 0.0;
  double lo = 0.0;
};

SplitLog split_log(std::int64_t n);

// (t * log n) reduced to [-pi, pi] with absolute error ~1e-15 for
// |t| <= 1e8 and n <= 1e7.
double reduced_phase(double t, SplitLog log_n);
// Same for t = t_hi + t_lo with |t_lo| <= ulp(t_hi).
double reduced_phase(double t_hi, double t_lo, SplitLog log_n);

// Per-term data of a block with the zero coefficients dropped.  Shared
// between the pointwise and the grid evaluators.
struct BlockTerms {
  std::vector<std::int64_t> n;
  std::vector<double> amp;  // c_n * n^{-sigma}
  std::vector<SplitLog> log_n;

  std::size_t size() const { return n.size(); }
  bool empty() const { return n.empty(); }
  double abs_sum() const;
};

class DirichletBlock {
 public:
  static DirichletBlock unit(double lo, double hi, double sigma);
  static DirichletBlock moebius(double lo, double hi, double sigma);
  static DirichletBlock von_mangoldt(double lo, double hi, double sigma);
  // coeffs[i] is c_{i+1}; must cover every integer in (lo, hi].
  static DirichletBlock custom(double lo, double hi, double sigma,
                               std::vector<double> coeffs);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double sigma() const { return sigma_; }
  CoeffKind kind() const { return kind_; }

  // First and last integer in (lo, hi]; first > last when empty.
  std::int64_t first_index() const;
  std::int64_t last_index() const;
  bool empty() const { return first_index() > last_index(); }
  std::int64_t length() const;

  double coefficient(std::int64_t n) const;
  // Same coefficients on another line sigma.
  DirichletBlock with_sigma(double sigma) const;

  // Materialized per-term data (computed lazily, then cached).
  const BlockTerms& terms() const;

 private:
  DirichletBlock(double lo, double hi, double sigma, CoeffKind kind,
                 std::shared_ptr<const std::vector<double>> coeffs);

  double lo_;
  double hi_;
  double sigma_;
  CoeffKind kind_;
  std::shared_ptr<const std::vector<double>> coeffs_;  // indexed by n-1
  mutable std::shared_ptr<const BlockTerms> terms_;
};

inline constexpr std::int64_t kMaxBlockLength = 1'000'000;
inline constexpr std::int64_t kMaxGridCount = 100'000'000;
inline constexpr std::int64_t kMaxSieve = 100'000'000;

Complex zeta_sum(const DirichletBlock& block, double t);
Complex zeta_sum(const DirichletBlock& block, double t_hi, double t_lo);

struct PrefixMax {
  std::int64_t y_star = 0;
  double max_value = 0.0;
};

// Integer prefix endpoint y maximizing |sum_{A<n<=y}|; ties keep the first.
PrefixMax prefix_max_sum(const DirichletBlock& block, double t);

// zeta_sum at every grid point.  Fast path: per-term phase rotation, with
// the state rebuilt from exact phases at the start of every chunk.
std::vector<Complex> grid_eval(const DirichletBlock& block,
                               const GridSpec& grid);

// |sum_{M1<m<=M2} m^{-s}| / (4 M^beta max_y |sum_{M1<m<=y} m^{-s-beta}|)
// with M = M2 for beta >= 0 and M = M1 for beta < 0.
double partial_summation_check(double sigma, double t, double beta, double M1,
                               double M2);

// mu(1..N) or Lambda(1..N) by a linear sieve; element i holds n = i+1.
std::vector<double> sieve_coefficients(CoeffKind kind, std::int64_t N);

// Integer-valued Moebius table mu(1..N) (element i holds n = i+1).
std::vector<std::int8_t> moebius_table(std::int64_t N);

}  // namespace zdl
