#include "zdl/reference.hpp"

#include <cmath>

namespace zdl::reference {

std::vector<Complex> grid_eval(const DirichletBlock& block, const GridSpec& grid) {
  grid.validate();
  std::vector<Complex> out(static_cast<std::size_t>(grid.count));
  for (std::int64_t k = 0; k < grid.count; ++k) {
    const auto [t, t_lo] = grid.at_split(k);
    out[static_cast<std::size_t>(k)] = zeta_sum(block, t, t_lo);
  }
  return out;
}

namespace {

// Prefix sums S(0..N) of n^{-sigma-it}, recomputed from scratch for every t.
void prefix(double sigma, std::pair<double, double> t, std::int64_t N, std::vector<Complex>& S) {
  S.assign(static_cast<std::size_t>(N + 1), Complex{});
  for (std::int64_t n = 1; n <= N; ++n) {
    const SplitLog l = split_log(n);
    const double ph = reduced_phase(t.first, t.second, l);
    const double a = std::exp(-sigma * l.hi);
    S[static_cast<std::size_t>(n)] =
        S[static_cast<std::size_t>(n - 1)] + Complex(a * std::cos(ph), -a * std::sin(ph));
  }
}

}  // namespace

std::vector<char> r_marks(double sigma, double eta, double T, const GridSpec& grid) {
  grid.validate();
  const auto N = static_cast<std::int64_t>(std::floor(std::sqrt(T)));
  const double thr = std::pow(T, eta);
  std::vector<char> marks(static_cast<std::size_t>(grid.count), 0);
  std::vector<Complex> S;
  for (std::int64_t k = 0; k < grid.count; ++k) {
    prefix(sigma, grid.at_split(k), N, S);
    bool hit = false;
    for (std::int64_t A = 1; A <= N && !hit; ++A)
      for (std::int64_t B = A + 1; B <= std::min(2 * A + 1, N) && !hit; ++B)
        hit = std::abs(S[static_cast<std::size_t>(B)] - S[static_cast<std::size_t>(A)]) >= thr;
    marks[static_cast<std::size_t>(k)] = hit;
  }
  return marks;
}

std::vector<char> theorem_lhs_marks(double nu, double eps, double T,
                                    const GridSpec& grid) {
  grid.validate();
  const auto lo = static_cast<std::int64_t>(std::ceil(std::pow(T, eps)));
  const auto hi = static_cast<std::int64_t>(std::floor(std::sqrt(T) / 2.0));
  std::vector<char> marks(static_cast<std::size_t>(grid.count), 0);
  if (lo > hi) return marks;
  std::vector<Complex> S;
  for (std::int64_t k = 0; k < grid.count; ++k) {
    prefix(1.0, grid.at_split(k), 2 * hi, S);
    bool hit = false;
    for (std::int64_t M = lo; M <= hi && !hit; ++M) {
      const double thr = std::pow(static_cast<double>(M), -nu);
      for (std::int64_t Mp = M + 1; Mp <= 2 * M && !hit; ++Mp)
        hit = std::abs(S[static_cast<std::size_t>(Mp)] - S[static_cast<std::size_t>(M)]) >= thr;
    }
    marks[static_cast<std::size_t>(k)] = hit;
  }
  return marks;
}

}  // namespace zdl::reference
