#!/usr/bin/env python3
"""Generate Gauss-Kronrod 7/15 nodes and weights from first principles.

The Kronrod extension nodes are the roots of the degree-8 Stieltjes
polynomial E8, defined by the orthogonality conditions
    integral_{-1}^{1} P7(x) E8(x) x^k dx = 0   for k = 0..7.
E8 is even and monic, so four unknown coefficients remain and the odd-k
conditions give an exact rational 4x4 linear system.  Roots are then
polished with mpmath and the 15 weights come from solving the (even)
moment equations at 60 digits.

Run: python tools/gen_gk15.py
"""

from fractions import Fraction

import mpmath as mp

mp.mp.dps = 60

# P7 in monomial coefficients (ascending powers), exact.
P7 = [Fraction(0), Fraction(-35, 16), Fraction(0), Fraction(315, 16),
      Fraction(0), Fraction(-693, 16), Fraction(0), Fraction(429, 16)]


def poly_mul(p, q):
    r = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            r[i + j] += a * b
    return r


def moment(m):
    # integral_{-1}^{1} x^m dx
    return Fraction(2, m + 1) if m % 2 == 0 else Fraction(0)


def integrate_poly(p):
    return sum(c * moment(i) for i, c in enumerate(p))


def solve_stieltjes():
    # E8(x) = x^8 + c6 x^6 + c4 x^4 + c2 x^2 + c0
    # Conditions: for k in {1,3,5,7}: int P7 * E8 * x^k = 0.
    # Build linear system A c = rhs over the unknowns (c6, c4, c2, c0).
    basis = {6: [Fraction(0)] * 6 + [Fraction(1)],
             4: [Fraction(0)] * 4 + [Fraction(1)],
             2: [Fraction(0)] * 2 + [Fraction(1)],
             0: [Fraction(1)]}
    x8 = [Fraction(0)] * 8 + [Fraction(1)]
    rows, rhs = [], []
    for k in (1, 3, 5, 7):
        xk = [Fraction(0)] * k + [Fraction(1)]
        w = poly_mul(P7, xk)
        rows.append([integrate_poly(poly_mul(w, basis[p])) for p in (6, 4, 2, 0)])
        rhs.append(-integrate_poly(poly_mul(w, x8)))
    # Gaussian elimination over Fractions.
    n = 4
    A = [row[:] + [r] for row, r in zip(rows, rhs)]
    for col in range(n):
        piv = next(i for i in range(col, n) if A[i][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        pv = A[col][col]
        A[col] = [v / pv for v in A[col]]
        for i in range(n):
            if i != col and A[i][col] != 0:
                f = A[i][col]
                A[i] = [v - f * w for v, w in zip(A[i], A[col])]
    c6, c4, c2, c0 = (A[i][n] for i in range(n))
    return c6, c4, c2, c0


def main():
    c6, c4, c2, c0 = solve_stieltjes()
    print("E8 coefficients:", c6, c4, c2, c0)

    # Roots of E8 via the quartic in z = x^2.
    zroots = mp.polyroots([mp.mpf(1), mp.mpf(c6.numerator) / c6.denominator,
                           mp.mpf(c4.numerator) / c4.denominator,
                           mp.mpf(c2.numerator) / c2.denominator,
                           mp.mpf(c0.numerator) / c0.denominator], maxsteps=200)
    kron_new = sorted(mp.sqrt(z) for z in zroots)

    # Gauss nodes: roots of P7.
    p7 = [mp.mpf(429) / 16, 0, mp.mpf(-693) / 16, 0, mp.mpf(315) / 16, 0,
          mp.mpf(-35) / 16, 0]
    groots = mp.polyroots(p7, maxsteps=200)
    gauss = sorted(r.real for r in groots if r.real > 1e-30)

    nodes = sorted([mp.mpf(0)] + [x for x in gauss] + [x for x in kron_new])
    print("positive K15 nodes:")
    for x in nodes:
        print("  ", mp.nstr(x, 25))

    # Weights: solve sum_i w_i x_i^(2m) = 2/(2m+1), m = 0..7
    # with symmetry (center weight once, pair weights doubled).
    M = mp.matrix(8, 8)
    b = mp.matrix(8, 1)
    for m in range(8):
        b[m] = mp.mpf(2) / (2 * m + 1)
        for j, x in enumerate(nodes):
            M[m, j] = (1 if x == 0 else 2) * x ** (2 * m)
    wk = mp.lu_solve(M, b)
    print("K15 weights (node order as above):")
    for w in wk:
        print("  ", mp.nstr(w, 25))

    # G7 weights: w = 2/((1-x^2) P7'(x)^2)
    def p7val(x):
        return (429 * x**7 - 693 * x**5 + 315 * x**3 - 35 * x) / 16

    def p7der(x):
        return (3003 * x**6 - 3465 * x**4 + 945 * x**2 - 35) / 16

    print("G7 nodes/weights:")
    gw = []
    for x in [mp.mpf(0)] + gauss:
        w = 2 / ((1 - x * x) * p7der(x) ** 2)
        gw.append((x, w))
        print("  ", mp.nstr(x, 25), mp.nstr(w, 25))

    # Exactness self-check: K15 must integrate x^k exactly for k <= 22.
    maxerr = mp.mpf(0)
    for k in range(0, 23, 2):
        approx = sum((1 if x == 0 else 2) * w * x**k for x, w in zip(nodes, wk))
        maxerr = max(maxerr, abs(approx - mp.mpf(2) / (k + 1)))
    print("K15 moment exactness (k<=22) max err:", mp.nstr(maxerr, 5))
    maxerr = mp.mpf(0)
    for k in range(0, 13, 2):
        approx = sum((1 if x == 0 else 2) * w * x**k for x, w in gw)
        maxerr = max(maxerr, abs(approx - mp.mpf(2) / (k + 1)))
    print("G7 moment exactness (k<=12) max err:", mp.nstr(maxerr, 5))

    # Emit python literals, node-descending like the usual tables.
    ordered = sorted(nodes, reverse=True)
    wmap = {mp.nstr(x, 40): w for x, w in zip(nodes, wk)}
    gmap = {mp.nstr(x, 40): w for x, w in gw}
    print("\n# nodes (positive half, descending), kronrod weights, gauss weights")
    for x in ordered:
        wkk = wmap[mp.nstr(x, 40)]
        wgg = gmap.get(mp.nstr(x, 40), mp.mpf(0))
        print("    (%s, %s, %s)," % (mp.nstr(x, 22), mp.nstr(wkk, 22),
                                     mp.nstr(wgg, 22)))


if __name__ == "__main__":
    main()
