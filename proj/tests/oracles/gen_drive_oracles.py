#!/usr/bin/env python3
"""Frozen reference values for the field-profile tests.

Independent of the C++ code paths: imaginary-axis integrals by brute-force
midpoint summation (1e6 panels), pole values and transforms from closed forms
evaluated in 50-digit arithmetic.  Output is pasted into test_drive.cpp as
literal constants.
"""
import mpmath as mp

mp.mp.dps = 50


def h_imag_lorentz(r, width, tau):
    z = tau / width
    return r / (1 - z * z) ** 3


def midpoint_integral(f, a, b, n=1_000_000):
    h = (b - a) / n
    return h * mp.fsum(f(a + (k + mp.mpf(1) / 2) * h) for k in range(n))


def main():
    r, width = mp.mpf("0.01"), mp.mpf("0.5")

    i_mid = midpoint_integral(lambda s: h_imag_lorentz(r, width, s), mp.mpf(0), mp.mpf("0.4"))
    print(f"lorentz I(0.4) midpoint 1e6   = {mp.nstr(i_mid, 17)}")

    z = mp.mpf("0.4") / width
    i_cf = r * width * (z / 4 / (1 - z**2) ** 2 + 3 * z / 8 / (1 - z**2) + mp.mpf(3) / 8 * mp.atanh(z))
    print(f"lorentz I(0.4) closed form    = {mp.nstr(i_cf, 17)}")

    tau = mp.mpf("0.999") * width
    print(f"lorentz h_imag(0.999*width)   = {mp.nstr(h_imag_lorentz(r, width, tau), 17)}")

    # Transform of r/(1+(t/width)^2)^3: (pi/8) r width e^{-u} (u^2+3u+3), u = width*|Omega|.
    for u in (mp.mpf(0), mp.mpf(8), mp.mpf(14), mp.mpf(28)):
        val = mp.pi / 8 * r * width * mp.e**-u * (u * u + 3 * u + 3)
        print(f"lorentz F(u={u})             = {mp.nstr(val, 17)}")

    u = mp.mpf(14)
    ratio = mp.e**-u * (4 * u * u + 6 * u + 3) / (u * u + 3 * u + 3)
    print(f"doubling decay exponent u=14  = {mp.nstr(-mp.log(ratio) / u, 17)}")

    rg, wg = mp.mpf("0.02"), mp.mpf("1.5")
    g_mid = midpoint_integral(lambda s: rg * mp.e ** ((wg * s) ** 2), mp.mpf(0), mp.mpf("0.3"))
    g_cf = rg * mp.sqrt(mp.pi) / (2 * wg) * mp.erfi(wg * mp.mpf("0.3"))
    print(f"gauss I(0.3) midpoint 1e6     = {mp.nstr(g_mid, 17)}")
    print(f"gauss I(0.3) closed form      = {mp.nstr(g_cf, 17)}")
    print(f"gauss F(2.0) closed form      = {mp.nstr(rg * mp.sqrt(mp.pi) / wg * mp.e ** (-mp.mpf(4) / (4 * wg * wg)), 17)}")

    rc, wc = mp.mpf("0.05"), mp.mpf("2.0")
    print(f"cosine I(0.7) closed form     = {mp.nstr(rc * mp.sinh(wc * mp.mpf('0.7')) / wc, 17)}")


if __name__ == "__main__":
    main()
