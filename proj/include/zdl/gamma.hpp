#pragma once

// Complex log-gamma (Stirling series with upward recurrence) and the
// functional-equation factor chi(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s).

#include <complex>

#include "zdl/eval.hpp"

namespace zdl {

using ComplexL = std::complex<long double>;

// Principal branch: analytic continuation of the real lgamma from the
// positive axis, cut along the negative real axis.
ComplexL log_gamma_ext(ComplexL s);
Complex log_gamma(Complex s);

// log chi(s), defined modulo 2 pi i.  Requires |Im s| >= 1.
ComplexL log_chi(ComplexL s);
Complex chi_factor(Complex s);

}  // namespace zdl
