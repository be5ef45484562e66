#!/usr/bin/env python3
# Regenerates tests/support/oracle_values.hpp.  mpmath at 40 digits for the
# analytic values, plain integer enumeration for the arithmetic ones.  The
# header is committed; rerun only when an oracle changes.

import itertools
import os
from fractions import Fraction

import mpmath as mp

mp.mp.dps = 40
OUT = os.path.join(os.path.dirname(__file__), "..", "support", "oracle_values.hpp")


def c(z):
    z = mp.mpc(z)
    return "{%s, %s}" % (mp.nstr(z.real, 20, min_fixed=-30, max_fixed=30),
                         mp.nstr(z.imag, 20, min_fixed=-30, max_fixed=30))


def r(x):
    return mp.nstr(mp.mpf(x), 20, min_fixed=-30, max_fixed=30)


def block(lo, hi, sigma, t):
    s = mp.mpc(sigma, t)
    return mp.fsum(mp.power(n, -s) for n in range(int(mp.floor(lo)) + 1, int(mp.floor(hi)) + 1))


def prefix_max(lo, hi, sigma, t):
    s = mp.mpc(sigma, t)
    acc, best = mp.mpc(0), mp.mpf(0)
    for n in range(int(lo) + 1, int(hi) + 1):
        acc += mp.power(n, -s)
        best = max(best, abs(acc))
    return best


def mobius(n):
    m, res, p = n, 1, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            res = -res
        p += 1
    return -res if m > 1 else res


def a_coeff(U, R, n):
    return sum(mobius(r_) for r_ in range(1, n + 1) if n % r_ == 0 and r_ <= R and n // r_ <= U)


def d_k(k, n):
    # ordered factorizations of n into k parts, brute force
    divs = [d for d in range(1, n + 1) if n % d == 0]
    cnt = 0
    for tup in itertools.product(divs, repeat=k - 1):
        p = 1
        for d in tup:
            p *= d
        if n % p == 0:
            cnt += 1
    return cnt


lines = ["#pragma once", "",
         "// Generated by tests/oracles/gen_oracles.py (mpmath, 40 digits).  Do not edit.", "",
         "#include <array>", "#include <complex>", "#include <cstdint>", "",
         "namespace oracle {", "",
         "using C = std::complex<double>;", ""]

# zeta sums
lines.append("// sum_{1<n<=50} n^{-1/2-100i}")
lines.append("inline const C kBlockHalf100 = C%s;" % c(block(1, 50, 0.5, 100)))
lines.append("// max prefix of sum_{0<n<=2} n^{-i pi}")
lines.append("inline constexpr double kPrefixPi = %s;" % r(prefix_max(0, 2, 0, mp.pi)))
ps = [(1.0, 37.2, 0.3, 10, 20), (0.5, -1000.0, -0.25, 50, 100)]
lines.append("// partial summation ratios: sigma, t, beta, M1, M2, ratio")
lines.append("struct PsCase { double sigma, t, beta, M1, M2, ratio; };")
rows = []
for sigma, t, beta, M1, M2 in ps:
    lhs = abs(block(M1, M2, sigma, t))
    M = M2 if beta >= 0 else M1
    rhs = 4 * mp.power(M, beta) * prefix_max(M1, M2, sigma + beta, t)
    rows.append("{%r, %r, %r, %r, %r, %s}" % (sigma, t, beta, float(M1), float(M2), r(lhs / rhs)))
lines.append("inline constexpr std::array<PsCase, %d> kPartialSummation{{%s}};" % (len(rows), ", ".join(rows)))

# gamma, chi
lines.append("inline const C kLogGamma3p4i = C%s;" % c(mp.loggamma(mp.mpc(3, 4))))
lines.append("inline const C kLogGammaMinus2p5p10i = C%s;" % c(mp.loggamma(mp.mpc(-2.5, 10))))
lines.append("inline const C kLogGamma0p5p1e5i = C%s;" % c(mp.loggamma(mp.mpc(0.5, 1e5))))


def chi(s):
    s = mp.mpc(s)
    return mp.power(2, s) * mp.power(mp.pi, s - 1) * mp.sin(mp.pi * s / 2) * mp.gamma(1 - s)


lines.append("inline constexpr double kAbsChi0p1000i = %s;" % r(abs(chi(mp.mpc(0, 1000)))))
lines.append("inline const C kChi0p3p50i = C%s;" % c(chi(mp.mpc(0.3, 50))))

# zeta
zpts = [(0.5, 0.0), (0.5, 1000.0), (0.7, 5000.5), (1.5, 20.0), (0.25, 100.0), (-0.5, 30.0),
        (1.0, 10000.0), (2.0, 5.0), (0.9, 123456.7)]
lines.append("struct ZetaCase { double sigma, t; C value; };")
rows = ["{%r, %r, C%s}" % (a, b, c(mp.zeta(mp.mpc(a, b)))) for a, b in zpts]
lines.append("inline const std::array<ZetaCase, %d> kZeta{{%s}};" % (len(rows), ", ".join(rows)))
lines.append("inline constexpr double kZetaPrimeOverZeta2 = %s;" % r(mp.zeta(2, derivative=1) / mp.zeta(2)))
lines.append("inline const C kZetaPrimeOverZeta_2p5i = C%s;" %
             c(mp.zeta(mp.mpc(2, 5), derivative=1) / mp.zeta(mp.mpc(2, 5))))
lines.append("inline const C kZetaPrimeOverZeta_0p75p100i = C%s;" %
             c(mp.zeta(mp.mpc(0.75, 100), derivative=1) / mp.zeta(mp.mpc(0.75, 100))))

# zeros, theta, Z
zs = [mp.zetazero(n).imag for n in (1, 2, 3, 29, 30, 100, 649)]
lines.append("// ordinates of zeros number 1, 2, 3, 29, 30, 100, 649")
lines.append("inline constexpr std::array<double, %d> kZeroOrdinates{%s};" % (len(zs), ", ".join(r(z) for z in zs)))
ts = [10.0, 100.0, 500.5, 5000.25]
lines.append("inline constexpr std::array<std::array<double, 2>, %d> kTheta{{%s}};" %
             (len(ts), ", ".join("{%r, %s}" % (t, r(mp.siegeltheta(t))) for t in ts)))
ts = [50.0, 399.0, 500.5, 1000.3, 5000.7]
lines.append("inline constexpr std::array<std::array<double, 2>, %d> kHardyZ{{%s}};" %
             (len(ts), ", ".join("{%r, %s}" % (t, r(mp.siegelz(t))) for t in ts)))
# number of zeros up to 500 and 1000 from the Riemann-Siegel count
lines.append("inline constexpr std::int64_t kZerosUpTo500 = %d;" % int(mp.nzeros(500)))
lines.append("inline constexpr std::int64_t kZerosUpTo1000 = %d;" % int(mp.nzeros(1000)))

# |sum Lambda(n) e^{-n/Y} n^{-s} + zeta'/zeta(s)| at s = 2+100i, Y = 400, summed to n = 45 Y
Y, s = 400, mp.mpc(2, 100)
N = 45 * Y
sieve = [0] * (N + 1)
for p in range(2, N + 1):
    if sieve[p] == 0:
        for q in range(p, N + 1, p):
            sieve[q] = sieve[q] or p
def mangoldt(n):
    p = sieve[n]
    while n % p == 0:
        n //= p
    return mp.log(p) if n == 1 else 0
smoothed = mp.fsum(mangoldt(n) * mp.exp(-mp.mpf(n) / Y) * mp.power(n, -s) for n in range(2, N + 1))
lines.append("inline constexpr double kSmoothedResidual2p100iY400 = %s;" %
             r(abs(smoothed + mp.zeta(s, derivative=1) / mp.zeta(s))))

# arithmetic
table = [a_coeff(10, 3, n) for n in range(1, 31)]
lines.append("// a_n for U=10, R=3, n=1..30")
lines.append("inline constexpr std::array<std::int64_t, 30> kMollifiedU10R3{%s};" % ", ".join(map(str, table)))
table = [a_coeff(20, 5.5, n) for n in range(1, 111)]
lines.append("// a_n for U=20, R=5.5, n=1..110")
lines.append("inline constexpr std::array<std::int64_t, 110> kMollifiedU20R55{%s};" % ", ".join(map(str, table)))
d4 = [d_k(4, n) for n in range(1, 37)]
lines.append("// d_4(n), n=1..36, ordered factorizations")
lines.append("inline constexpr std::array<std::uint64_t, 36> kD4{%s};" % ", ".join(map(str, d4)))
mom = sum(Fraction(d_k(4, n) ** 2) / Fraction(n) for n in range(10, 37))
lines.append("// sum_{9<n<=36} d_4(n)^2/n  (k=2, K=3, nu=1/2)")
lines.append("inline constexpr double kDivisorMomentK2K3 = %s;" % r(mp.mpf(mom.numerator) / mom.denominator))

lines += ["", "}  // namespace oracle", ""]
with open(OUT, "w") as f:
    f.write("\n".join(lines))
print("wrote", os.path.normpath(OUT))
