#include "zdl/gamma.hpp"

#include <array>
#include <cmath>
#include <string>

namespace zdl {

namespace {

using LD = long double;

constexpr LD kPi = 3.141592653589793238462643383279502884L;
constexpr LD kHalfLog2Pi = 0.918938533204672741780329736405617640L;
constexpr LD kLog2 = 0.693147180559945309417232121458176568L;
constexpr LD kLogPi = 1.144729885849400174143427351353058712L;

// B_{2k} / (2k (2k-1)), k = 1..12.
constexpr std::array<LD, 12> kStirling = {
    1.0L / 12.0L,
    -1.0L / 360.0L,
    1.0L / 1260.0L,
    -1.0L / 1680.0L,
    1.0L / 1188.0L,
    -691.0L / 360360.0L,
    1.0L / 156.0L,
    -3617.0L / 122400.0L,
    43867.0L / 244188.0L,
    -174611.0L / 125400.0L,
    77683.0L / 5796.0L,
    -236364091.0L / 1506960.0L,
};

bool is_pole(ComplexL s) {
  return s.imag() == 0.0L && s.real() <= 0.0L && std::floor(s.real()) == s.real();
}

ComplexL stirling(ComplexL z) {
  ComplexL r = (z - 0.5L) * std::log(z) - z + kHalfLog2Pi;
  const ComplexL w = 1.0L / z;
  const ComplexL w2 = w * w;
  ComplexL p = w;
  for (LD c : kStirling) {
    r += c * p;
    p *= w2;
  }
  return r;
}

// log sin z, modulo 2 pi i, without overflow for large |Im z|.
ComplexL log_sin(ComplexL z) {
  const ComplexL I(0.0L, 1.0L);
  if (z.imag() >= 0.0L) {
    const ComplexL e = std::exp(2.0L * I * z);
    return -I * z + std::log((e - 1.0L) / (2.0L * I));
  }
  const ComplexL e = std::exp(-2.0L * I * z);
  return I * z + std::log((1.0L - e) / (2.0L * I));
}

}  // namespace

ComplexL log_gamma_ext(ComplexL s) {
  require(std::isfinite(s.real()) && std::isfinite(s.imag()),
          ErrorKind::input_domain, "log_gamma: non-finite argument");
  require(!is_pole(s), ErrorKind::pole,
          "log_gamma: pole at nonpositive integer " + std::to_string(static_cast<double>(s.real())));
  // Raise the argument until the series is accurate to ~1e-19.
  ComplexL shift(0.0L, 0.0L);
  ComplexL z = s;
  while ((z.real() < 20.0L && std::abs(z.imag()) < 20.0L) || z.real() < 0.0L) {
    shift += std::log(z);
    z += 1.0L;
  }
  return stirling(z) - shift;
}

Complex log_gamma(Complex s) {
  const ComplexL r = log_gamma_ext(ComplexL(s.real(), s.imag()));
  return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

ComplexL log_chi(ComplexL s) {
  require(std::isfinite(s.real()) && std::isfinite(s.imag()),
          ErrorKind::input_domain, "chi_factor: non-finite argument");
  require(std::abs(s.imag()) >= 1.0L, ErrorKind::domain,
          "chi_factor: requires |Im s| >= 1");
  return s * kLog2 + (s - 1.0L) * kLogPi + log_sin(kPi * s / 2.0L) +
         log_gamma_ext(1.0L - s);
}

Complex chi_factor(Complex s) {
  ComplexL l = log_chi(ComplexL(s.real(), s.imag()));
  // Reduce the phase in long double before the final exp.
  const LD ph = std::remainder(l.imag(), 2.0L * kPi);
  const ComplexL r = std::exp(ComplexL(l.real(), ph));
  return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

}  // namespace zdl
