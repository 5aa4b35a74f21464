"""Hardy-integral bounds suite: I(y), its printed and rederived
lower/upper bounds, the two tabulated constants, and the positivity and
squeeze claims.

Both bound variants are first class: the printed forms are evaluated
verbatim (with an overflow clamp on the erfi term) so the misprint
evidence stays auditable, and the derived forms come from redoing the
two Cauchy-Schwarz steps:

    int_0^1 e^(y t^2) dt      = sqrt(pi) erfi(sqrt y) / (2 sqrt y)
    int_1^inf t^-2 e^(-y t^2) = e^-y - sqrt(pi y) erfc(sqrt y)
    int_0^1 e^(-2y t^2) dt    = sqrt(pi/(8y)) erf(sqrt(2y))

which replace the printed (2 c1)^2 by 2 c1^2 and the final erfi by erfc.
"""

import math
from dataclasses import dataclass

from . import specfun
from .errors import DomainError, NonConvergenceError
from .quadrature import DecayHint, QuadResult, integrate_log_singular, \
    integrate_semi_infinite

ERFI_CLAMP = 12.0  # printed lower bound clamps sqrt(y) here and flags the row


@dataclass(frozen=True)
class PaperConstants:
    """Tabulated constants used verbatim inside the bound formulas."""
    c1: float = 0.952894
    c2: float = 1.56624
    gamma: float = 0.5772156649015329


PAPER = PaperConstants()


@dataclass
class BoundsRow:
    """One y gridpoint of the lower <= I(y) <= upper sandwich."""
    y: float
    lower_printed: float
    lower_derived: float
    i_value: float
    i_abs_err: float
    upper_derived: float
    upper_printed: float
    sandwich_ok_derived: bool
    sandwich_ok_printed: bool
    flags: str = ""


def hardy_integral(y: float, quad_tol: float = 1e-10) -> QuadResult:
    """I(y) = integral_0^inf (psi(t+1) - log t) exp(-y t^2) dt."""
    if not (1e-3 <= y <= 1e6):
        raise DomainError(f"hardy_integral domain is [1e-3, 1e6], got {y!r}")

    def f(t):
        e = y * t * t
        return specfun.psibar(0, t) * math.exp(-e) if e < 708.0 else 0.0

    head = integrate_log_singular(f, 1.0, 0.5 * quad_tol)
    tail = integrate_semi_infinite(f, 1.0, 0.5 * quad_tol,
                                   DecayHint("gaussian", y))
    return QuadResult(head.value + tail.value,
                      head.abs_err_estimate + tail.abs_err_estimate,
                      head.evaluations + tail.evaluations,
                      head.converged and tail.converged)


def recompute_constants(quad_tol: float = 1e-9) -> tuple[float, float]:
    """Recompute the two tabulated constants from their integrals."""
    c1 = integrate_log_singular(lambda t: math.sqrt(specfun.psibar(0, t)),
                                1.0, quad_tol)
    c2 = integrate_log_singular(lambda t: specfun.psibar(0, t) ** 2,
                                1.0, quad_tol)
    if not (c1.converged and c2.converged):
        raise NonConvergenceError("constant recomputation did not converge")
    return c1.value, c2.value


def _erfi_guarded(x: float) -> tuple[float, bool]:
    if x > ERFI_CLAMP:
        return specfun.erf_family("erfi", ERFI_CLAMP), True
    return specfun.erf_family("erfi", x), False


def lower_bound(y: float, variant: str = "derived",
                constants: PaperConstants = PAPER) -> float:
    """Lower bound for I(y); variant 'printed' or 'derived'."""
    if variant not in ("printed", "derived"):
        raise DomainError(f"variant must be printed|derived, got {variant!r}")
    if not (y > 0.0):
        raise DomainError(f"lower_bound requires y > 0, got {y!r}")
    rt = math.sqrt(y)
    erfi_rt, _ = _erfi_guarded(rt)
    ei_term = -specfun.expint_ei(-y) / 4.0
    if variant == "printed":
        first = (2.0 * constants.c1) ** 2 * rt / (math.sqrt(math.pi) * erfi_rt)
        last = math.sqrt(y * math.pi) / 12.0 * erfi_rt
    else:
        first = 2.0 * constants.c1 ** 2 * rt / (math.sqrt(math.pi) * erfi_rt)
        last = math.sqrt(math.pi * y) * specfun.erf_family("erfc", rt) / 12.0
    return first + ei_term - math.exp(-y) / 12.0 + last


def upper_bound(y: float, variant: str = "derived",
                constants: PaperConstants = PAPER) -> float:
    """Upper bound for I(y); variant 'printed' or 'derived'."""
    if variant not in ("printed", "derived"):
        raise DomainError(f"variant must be printed|derived, got {variant!r}")
    if not (y > 0.0):
        raise DomainError(f"upper_bound requires y > 0, got {y!r}")
    factor = math.pi / (2.0 * y) if variant == "printed" else math.pi / (8.0 * y)
    inner = constants.c2 * math.sqrt(factor) * specfun.erf_family(
        "erf", math.sqrt(2.0 * y))
    return math.sqrt(inner) - specfun.expint_ei(-y) / 4.0


def log_grid(lo: float, hi: float, n: int) -> list[float]:
    """n logarithmically spaced points from lo to hi inclusive."""
    if not (0.0 < lo < hi) or n < 2:
        raise DomainError(f"bad grid spec {lo!r}:{hi!r}:{n!r}")
    ratio = hi / lo
    return [lo * ratio ** (i / (n - 1)) for i in range(n)]


def _assert_digamma_inequality():
    """Re-assert the pointwise digamma inequality before trusting bounds."""
    for x in log_grid(1e-3, 1e3, 25):
        v = specfun.psibar(0, x)
        if not (0.5 / x - 1.0 / (12.0 * x * x) < v < 0.5 / x):
            raise NonConvergenceError(
                f"digamma two-sided inequality failed at x={x!r}")


def scan_bounds(y_grid: list[float], quad_tol: float = 1e-10) -> list[BoundsRow]:
    """One BoundsRow per y; per-row quadrature failures are flagged, not
    raised, so a scan always returns the full grid."""
    _assert_digamma_inequality()
    rows = []
    prev = None
    for y in y_grid:
        flags = []
        if math.sqrt(y) > ERFI_CLAMP:
            flags.append("overflow-clamped")
        try:
            res = hardy_integral(y, quad_tol)
            i_val, i_err = res.value, res.abs_err_estimate
            if not res.converged:
                flags.append("quad-unconverged")
        except NonConvergenceError:
            rows.append(BoundsRow(y, math.nan, math.nan, math.nan, math.nan,
                                  math.nan, math.nan, False, False,
                                  "quad-error"))
            prev = None
            continue
        lo_p = lower_bound(y, "printed")
        lo_d = lower_bound(y, "derived")
        up_d = upper_bound(y, "derived")
        up_p = upper_bound(y, "printed")
        ok_d = (lo_d - i_err <= i_val <= up_d + i_err)
        ok_p = (lo_p - i_err <= i_val <= up_p + i_err)
        if not (i_val > 0.0):
            flags.append("nonpositive")
        if prev is not None and i_val > prev + 2.0 * i_err:
            flags.append("monotonicity-break")
        prev = i_val
        rows.append(BoundsRow(y, lo_p, lo_d, i_val, i_err, up_d, up_p,
                              ok_d, ok_p, ",".join(flags)))
    return rows
