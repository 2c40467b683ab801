#!/usr/bin/env python3
"""Frozen references for the under-barrier bookkeeping tests.

Everything is computed from the closed-form imaginary-axis antiderivative of
the cubed-Lorentzian profile plus mpmath root finding and brute-force panel
sums, so none of the C++ quadrature or substitution machinery is involved.
"""
import mpmath as mp

mp.mp.dps = 40


def I_tau(r, w, tau):
    z = tau / w
    s = 1 - z * z
    return r * w * (z / (4 * s * s) + 3 * z / (8 * s) + mp.mpf(3) / 8 * mp.atanh(z))


def h_i(r, w, tau):
    z = tau / w
    return r / (1 - z * z) ** 3


def tau0_of(r, w):
    f = lambda t: t + I_tau(r, w, t) - 1
    lo = mp.mpf("1e-9")
    hi = min(mp.mpf(1) + mp.mpf("1e-9"), w * (1 - mp.mpf("1e-20")))
    assert f(lo) < 0 and f(hi) > 0
    for _ in range(250):
        mid = (lo + hi) / 2
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def exit_point(r, w, tau0, n=1_000_000):
    # tau = tau0 - s^2 panels; midpoint rule
    smax = mp.sqrt(tau0)
    h = smax / n
    total = mp.fsum(
        2 * (smax * (k + mp.mpf(1) / 2) / n) * h_i(r, w, tau0 - (smax * (k + mp.mpf(1) / 2) / n) ** 2)
        * (tau0 - (smax * (k + mp.mpf(1) / 2) / n) ** 2 + I_tau(r, w, tau0 - (smax * (k + mp.mpf(1) / 2) / n) ** 2))
        / mp.sqrt(1 - (tau0 - (smax * (k + mp.mpf(1) / 2) / n) ** 2 + I_tau(r, w, tau0 - (smax * (k + mp.mpf(1) / 2) / n) ** 2)) ** 2)
        for k in range(n)
    )
    return 1 - 2 * h * total


def reduced_action(r, w, tau0, n=1_000_000):
    smax = mp.sqrt(tau0)
    h = smax / n
    def term(k):
        s = smax * (k + mp.mpf(1) / 2) / n
        R = tau0 - s * s + I_tau(r, w, tau0 - s * s)
        return 2 * s * mp.sqrt(max(1 - R * R, mp.mpf(0)))
    return h * mp.fsum(term(k) for k in range(n))


def closed_form(w, g):
    if w >= 1:
        return mp.pi * g / 2
    return g * (mp.asin(w) + w * mp.sqrt(1 - w * w))


def main():
    r, w = mp.mpf("0.01"), mp.mpf("0.5")
    tau0 = tau0_of(r, w)
    print(f"lorentz(0.01,0.5) tau0      = {mp.nstr(tau0, 17)}")
    xe = exit_point(r, w, tau0, n=200_000)
    print(f"lorentz(0.01,0.5) x_exit    = {mp.nstr(xe, 17)}")
    red = reduced_action(r, w, tau0, n=200_000)
    print(f"lorentz(0.01,0.5) reduced   = {mp.nstr(red, 17)}")
    print(f"lorentz(0.01,0.5) A(g=20)   = {mp.nstr(40 * red, 17)}")

    w2 = mp.mpf("2.0")
    tau0_wide = tau0_of(r, w2)
    print(f"lorentz(0.01,2.0) tau0      = {mp.nstr(tau0_wide, 17)}")

    print(f"closed_form(0.5, 20)        = {mp.nstr(closed_form(mp.mpf('0.5'), 20), 17)}")
    print(f"closed_form(0.25, 20)       = {mp.nstr(closed_form(mp.mpf('0.25'), 20), 17)}")

    # Convergence of the full action toward the singular-pulse closed form.
    for wv in ("0.25", "0.5"):
        wq = mp.mpf(wv)
        cf = closed_form(wq, 20)
        gaps = []
        for rv in ("0.03", "0.01", "0.003"):
            rq = mp.mpf(rv)
            t0 = tau0_of(rq, wq)
            a = 40 * reduced_action(rq, wq, t0, n=120_000)
            gaps.append(abs(a - cf) / cf)
            print(f"  gap theta={wv} r={rv}: A={mp.nstr(a, 10)} cf={mp.nstr(cf, 10)} rel={mp.nstr(gaps[-1], 6)}")

    # Parabolic-barrier WKB closed form pi*(V0-E)/(hbar*omega).
    V0, om, E = mp.mpf(1), mp.mpf(2), mp.mpf("0.3")
    print(f"parabola wkb (V0=1,om=2,E=0.3) = {mp.nstr(mp.pi * (V0 - E) / om, 17)}")
    # Hard square (2L/hbar) sqrt(2m(V0-E))
    print(f"square wkb (V0=1,L=2,E=0.4)    = {mp.nstr(4 * mp.sqrt(2 * mp.mpf('0.6')), 17)}")
    # Gaussian bump, interior turning points: V0=1, c=1.5, s=0.5, E=0.5, m=1.
    c, s0, Eb = mp.mpf("1.5"), mp.mpf("0.5"), mp.mpf("0.5")
    xa = mp.findroot(lambda x: mp.e ** (-((x - c) ** 2) / (2 * s0 * s0)) - Eb, c - s0)
    xb = mp.findroot(lambda x: mp.e ** (-((x - c) ** 2) / (2 * s0 * s0)) - Eb, c + s0)
    val = mp.quad(lambda x: mp.sqrt(2 * max(mp.e ** (-((x - c) ** 2) / (2 * s0 * s0)) - Eb, mp.mpf(0))), [xa, xb])
    print(f"bump turning points            = {mp.nstr(xa, 17)}, {mp.nstr(xb, 17)}")
    print(f"bump wkb (c=1.5,s=0.5,E=0.5)   = {mp.nstr(2 * val, 17)}")

    # Bump with the inner turning point capped by the well edge:
    # V0=1, c=1, s=0.6, E=0.15; V(0) = e^{-c^2/2s^2} > E.
    c2, s2, E2 = mp.mpf(1), mp.mpf("0.6"), mp.mpf("0.15")
    print(f"bump V(0) (c=1,s=0.6)          = {mp.nstr(mp.e ** (-(c2 * c2) / (2 * s2 * s2)), 17)}")
    xb2 = mp.findroot(lambda x: mp.e ** (-((x - c2) ** 2) / (2 * s2 * s2)) - E2, c2 + s2)
    val2 = mp.quad(lambda x: mp.sqrt(2 * (mp.e ** (-((x - c2) ** 2) / (2 * s2 * s2)) - E2)), [0, xb2])
    print(f"bump wkb capped (E=0.15)       = {mp.nstr(2 * val2, 17)}")

    # Parabola instanton: x_T, tau0, action for V0=1, omega=1.3, E=0.4.
    V0p, omp, Ep = mp.mpf(1), mp.mpf("1.3"), mp.mpf("0.4")
    xT = mp.sqrt(2 * (V0p - Ep)) / omp
    print(f"parabola xT (om=1.3,E=0.4)     = {mp.nstr(xT, 17)}")
    print(f"parabola tau0                  = {mp.nstr(mp.pi / (2 * omp), 17)}")
    print(f"parabola action                = {mp.nstr(mp.pi * (V0p - Ep) / omp, 17)}")


if __name__ == "__main__":
    main()
