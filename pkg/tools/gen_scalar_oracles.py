#!/usr/bin/env python3
"""Compute frozen scalar oracle values at 50 digits (mpmath).

Every value printed here is frozen into tests/_oracles.py.  Run once,
paste the output.  These are independent high-precision evaluations,
not produced by the package under test.

Run: python tools/gen_scalar_oracles.py
"""

import mpmath as mp

mp.mp.dps = 50


def p(name, val, digits=22):
    if isinstance(val, mp.mpc):
        print(f"{name} = complex({mp.nstr(val.real, digits)}, {mp.nstr(val.imag, digits)})")
    else:
        print(f"{name} = {mp.nstr(val, digits)}")


def main():
    gamma_e = mp.euler

    # --- gamma / digamma / polygamma ---
    p("LOG_GAMMA_CRIT", mp.loggamma(mp.mpc(0.5, 14.134725)))
    p("DIGAMMA_QUARTER", mp.digamma(mp.mpf(1) / 4))
    p("DIGAMMA_QUARTER_CLOSED", -gamma_e - mp.pi / 2 - 3 * mp.log(2))
    p("ZETA3", mp.zeta(3))
    p("PSI1_10", mp.psi(1, 10))
    p("PSI1_10_VIA_ZETA2", mp.zeta(2) - sum(mp.mpf(1) / k**2 for k in range(1, 10)))
    p("PSI2_1", mp.psi(2, 1))
    p("PSIBAR1_2", mp.psi(1, 3) - mp.mpf(1) / 2)
    p("PSIBAR0_2_5", mp.digamma(mp.mpf('3.5')) - mp.log(mp.mpf('2.5')))
    p("PSIBAR0_1000", mp.digamma(mp.mpf(1001)) - mp.log(mp.mpf(1000)))

    # --- zeta / xi ---
    p("ZETA_HALF", mp.zeta(mp.mpf(1) / 2))
    rho1 = mp.zetazero(1)
    p("FIRST_ZERO_T", rho1.imag)
    p("ZETA_AT_PUBLISHED_ZERO_ABS", abs(mp.zeta(mp.mpc(0.5, '14.1347251417'))))

    def xi(t):
        s = mp.mpc(0.5, 0) + mp.mpc(0, 1) * t
        return 0.5 * s * (s - 1) * mp.pi ** (-s / 2) * mp.gamma(s / 2) * mp.zeta(s)

    p("XI_0", xi(0).real)
    p("XI_0_CLOSED", (-mp.mpf(1) / 8) * mp.pi ** (mp.mpf(-1) / 4)
      * mp.gamma(mp.mpf(1) / 4) * mp.zeta(mp.mpf(1) / 2))
    p("XI_5", xi(5).real)
    p("XI_20", xi(20).real)
    p("XI_ABS_AT_PUBLISHED_ZERO", abs(xi(mp.mpf('14.1347251417'))))
    p("GAMMA_QUARTER", mp.gamma(mp.mpf(1) / 4))
    p("GAMMA_3QUARTER", mp.gamma(mp.mpf(3) / 4))

    # --- K0 and lattice sums ---
    p("K0_1", mp.besselk(0, 1))
    p("K0_2", mp.besselk(0, 2))
    p("K0_20", mp.besselk(0, 20))
    p("K0_001", mp.besselk(0, mp.mpf('0.01')))

    def s_direct(a):
        return 4 * mp.nsum(lambda n: mp.besselk(0, n * a), [1, mp.inf]) - 2 * mp.pi / a

    def s_lattice(a):
        tail = mp.nsum(lambda k: 1 / mp.sqrt(a * a + 4 * mp.pi**2 * k * k)
                       - 1 / (2 * mp.pi * k), [1, mp.inf])
        return 2 * (gamma_e + mp.log(a / (4 * mp.pi))) + 4 * mp.pi * tail

    p("S_5", s_direct(5))
    p("S_1_DIRECT", s_direct(1))
    p("S_1_LATTICE", s_lattice(1))
    p("S_05_DIRECT", s_direct(mp.mpf('0.5')))
    p("S_05_LATTICE", s_lattice(mp.mpf('0.5')))
    p("S_2_DIRECT", s_direct(2))
    p("S_2_LATTICE", s_lattice(2))
    p("S_001_LATTICE", s_lattice(mp.mpf('0.01')))
    p("S_001_LOGTERM", 2 * (gamma_e + mp.log(mp.mpf('0.01') / (4 * mp.pi))))

    # --- theta tail ---
    def theta_rest(y):
        return mp.nsum(lambda n: mp.exp(-mp.pi * n * n * y), [1, mp.inf])

    p("THETA_REST_1", theta_rest(1))
    p("THETA_REST_1_CLOSED", (mp.pi ** mp.mpf('0.25') / mp.gamma(mp.mpf(3) / 4) - 1) / 2)
    p("THETA_REST_01", theta_rest(mp.mpf('0.1')))
    p("THETA_REST_4", theta_rest(4))

    # --- erf family / Ei ---
    p("ERFI_1", mp.erfi(1))
    p("ERFI_5", mp.erfi(5))
    p("ERFI_12", mp.erfi(12))
    p("ERFC_2", mp.erfc(2))
    p("EI_M1", mp.ei(-1))
    p("EI_M01", mp.ei(mp.mpf('-0.1')))
    p("EI_M30", mp.ei(-30))

    # --- gaussian log moment ---
    def lgm(a):
        return -(mp.mpf(1) / 4) * mp.sqrt(mp.pi / a) * (gamma_e + mp.log(4 * a))

    p("LGM_1", lgm(1))
    p("LGM_1_QUAD", mp.quad(lambda t: mp.exp(-t * t) * mp.log(t), [0, 1, mp.inf]))
    p("LGM_100", lgm(100))
    p("LGM_100_QUAD", mp.quad(lambda t: mp.exp(-100 * t * t) * mp.log(t), [0, mp.mpf('0.1'), mp.inf]))
    p("LGM_QUARTER", lgm(mp.mpf('0.25')))

    # --- Mellin transform sanity: M[psibar0](1/2) = -pi*zeta(1/2) ---
    f_half = mp.quad(lambda t: (mp.digamma(t + 1) - mp.log(t)) / mp.sqrt(t),
                     [0, 1, 10, 100, 10000, mp.inf])
    p("MELLIN_HALF_QUAD", f_half)
    p("MELLIN_HALF_CLOSED", -mp.pi * mp.zeta(mp.mpf(1) / 2))


if __name__ == "__main__":
    main()
