#!/usr/bin/env python3
"""Fit Chebyshev expansions для exp(x)*sqrt(x)*K0(x) at 50 digits.

Two branches:
  B: x in [2, 8],  variable u = (x - 5)/3
  C: x in [8, inf), variable w = 16/x - 1

Coefficients are frozen into the K0 kernel.  The ascending series is used
below x = 2, so only these two branches need fitted data.

Run: python tools/gen_k0_cheb.py
"""

import mpmath as mp

mp.mp.dps = 50


def cheb_fit(f, n):
    """Chebyshev interpolation coefficients c_0..c_{n-1} on [-1,1]."""
    nodes = [mp.cos(mp.pi * (k + mp.mpf(1) / 2) / n) for k in range(n)]
    vals = [f(t) for t in nodes]
    coeffs = []
    for j in range(n):
        s = sum(vals[k] * mp.cos(mp.pi * j * (k + mp.mpf(1) / 2) / n)
                for k in range(n))
        coeffs.append(s * 2 / n)
    coeffs[0] /= 2
    return coeffs


def cheb_eval(coeffs, t):
    b0 = b1 = mp.mpf(0)
    for c in reversed(coeffs[1:]):
        b0, b1 = 2 * t * b0 - b1 + c, b0
    return t * b0 - b1 + coeffs[0]


def gk0(x):
    return mp.exp(x) * mp.sqrt(x) * mp.besselk(0, x)


def report(name, coeffs, to_x, lo, hi, samples=400):
    maxrel = mp.mpf(0)
    for i in range(samples + 1):
        t = -1 + mp.mpf(2) * i / samples
        x = to_x(t)
        if x is None:
            continue
        approx = cheb_eval(coeffs, t)
        exact = gk0(x)
        maxrel = max(maxrel, abs(approx / exact - 1))
    print(f"{name}: n={len(coeffs)} max rel err {mp.nstr(maxrel, 4)}")


def main():
    # Branch B: x in [2, 8]
    fB = lambda t: gk0(5 + 3 * t)
    cB = cheb_fit(fB, 40)
    cB = [c for i, c in enumerate(cB) if i < 2 or abs(c) > mp.mpf('1e-20')]
    report("B", cB, lambda t: 5 + 3 * t, 2, 8)

    # Branch C: x in [8, inf); w = 16/x - 1, x = 16/(w+1); skip w = -1.
    def fC(w):
        x = 16 / (w + 1)
        return gk0(x)
    cC = cheb_fit(fC, 44)
    cC = [c for i, c in enumerate(cC) if i < 2 or abs(c) > mp.mpf('1e-20')]
    report("C", cC, lambda t: None if t <= -0.9999 else 16 / (t + 1), 8, 1e6)
    # also spot check deep tail
    for x in (8, 12, 20, 50, 200, 2000):
        w = mp.mpf(16) / x - 1
        rel = abs(cheb_eval(cC, w) / gk0(x) - 1)
        print(f"  x={x}: rel {mp.nstr(rel, 4)}")

    print("\nK0_CHEB_MID = (")
    for c in cB:
        print(f"    {mp.nstr(c, 22)},")
    print(")")
    print("\nK0_CHEB_TAIL = (")
    for c in cC:
        print(f"    {mp.nstr(c, 22)},")
    print(")")


if __name__ == "__main__":
    main()
