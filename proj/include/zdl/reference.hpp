#pragma once

// Serial per-point reference implementations of the parallel kernels.
// Every value is recomputed from scratch with exact phase reduction; used by
// the tests as oracles and by the benchmark as the baseline.

#include <vector>

#include "zdl/eval.hpp"

namespace zdl::reference {

std::vector<Complex> grid_eval(const DirichletBlock& block, const GridSpec& grid);

// Marks of the large-value set R_{sigma,eta}(T): some block a < n <= b with
// 1 <= a < b <= min(2a+1, sqrt(T)) has |sum n^{-sigma-it}| >= T^eta.  These
// are exactly the integer ranges reachable by real 1 <= A < B <= 2A.
std::vector<char> r_marks(double sigma, double eta, double T, const GridSpec& grid);

// Marks of the theorem set: integers M in [T^eps, sqrt(T)/2], M' in (M, 2M]
// with |sum_{M<m<=M'} m^{-1-it}| >= M^{-nu}.
std::vector<char> theorem_lhs_marks(double nu, double eps, double T,
                                    const GridSpec& grid);

}  // namespace zdl::reference
