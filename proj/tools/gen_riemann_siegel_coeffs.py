#!/usr/bin/env python3
"""Power-series coefficients of the Riemann-Siegel corrections C0..C4.

Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p), written in z = 2p - 1:
Psi = -cos(pi z^2 / 2 - 5 pi / 8) / cos(pi z).  The corrections are linear
combinations of derivatives of Psi with respect to p (d/dp = 2 d/dz).
Emits a C++ table of coefficients in powers of z.
"""
import mpmath as mp

mp.mp.dps = 200
DEG = 140


def series_cos_sin_z2(scale):
    # cos(scale*z^2), sin(scale*z^2) as series in z
    c = [mp.mpf(0)] * (DEG + 1)
    s = [mp.mpf(0)] * (DEG + 1)
    for k in range(0, DEG // 2 + 1):
        term = scale ** k / mp.factorial(k)
        if 2 * k > DEG:
            break
        if k % 2 == 0:
            c[2 * k] = term * (1 if (k // 2) % 2 == 0 else -1)
        else:
            s[2 * k] = term * (1 if (k // 2) % 2 == 0 else -1)
    return c, s


def series_cos_z(scale):
    c = [mp.mpf(0)] * (DEG + 1)
    for k in range(0, DEG + 1, 2):
        c[k] = scale ** k / mp.factorial(k) * (1 if (k // 2) % 2 == 0 else -1)
    return c


def divide(num, den):
    q = [mp.mpf(0)] * (DEG + 1)
    for k in range(DEG + 1):
        acc = num[k]
        for j in range(1, k + 1):
            acc -= den[j] * q[k - j]
        q[k] = acc / den[0]
    return q


def deriv_p(a, times):
    out = list(a)
    for _ in range(times):
        out = [2 * (k + 1) * out[k + 1] for k in range(len(out) - 1)] + [mp.mpf(0)]
    return out


pi = mp.pi
cz2, sz2 = series_cos_sin_z2(pi / 2)
# cos(A - B) = cos A cos B + sin A sin B with A = pi z^2/2, B = 5 pi/8
num = [-(cz2[k] * mp.cos(5 * pi / 8) + sz2[k] * mp.sin(5 * pi / 8)) for k in range(DEG + 1)]
psi = divide(num, series_cos_z(pi))

d = {k: deriv_p(psi, k) for k in range(13)}


def comb(terms):
    out = [mp.mpf(0)] * (DEG + 1)
    for coef, order in terms:
        for k in range(DEG + 1):
            out[k] += coef * d[order][k]
    return out


C = [
    comb([(1, 0)]),
    comb([(-1 / (96 * pi**2), 3)]),
    comb([(1 / (64 * pi**2), 2), (1 / (18432 * pi**4), 6)]),
    comb([(-1 / (64 * pi**2), 1), (-1 / (3840 * pi**4), 5), (-1 / (5308416 * pi**6), 9)]),
    comb([(1 / (128 * pi**2), 0), (mp.mpf(19) / (24576 * pi**4), 4),
          (mp.mpf(11) / (5898240 * pi**6), 8), (1 / (2038431744 * pi**8), 12)]),
]

print("// Generated by tools/gen_riemann_siegel_coeffs.py; powers of z = 2p - 1.")
for j, c in enumerate(C):
    last = max(k for k in range(DEG - 20) if abs(c[k]) > mp.mpf("1e-22"))
    vals = [mp.nstr(c[k], 20, min_fixed=-1, max_fixed=-1) for k in range(last + 1)]
    print(f"constexpr std::array<double, {last + 1}> kC{j} = {{")
    for i in range(0, len(vals), 3):
        print("    " + ", ".join(vals[i:i + 3]) + ",")
    print("};")
