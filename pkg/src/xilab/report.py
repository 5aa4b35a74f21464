"""Run orchestration and deterministic report assembly.

A RunReport bundles kernel selftests, identity cases, and the bounds
scan, with printed-vs-corrected evidence kept side by side.  Printed
variants of disputed formulas are informational: their DIVERGENT or FAIL
verdicts document the misprint evidence and do not fail the run.

Serialization is deterministic: no timestamps, fixed key order, floats
at full round-trip precision, residuals rounded to three significant
digits.  Non-finite numbers serialize as null.
"""

import cmath
import concurrent.futures
import csv
import io
import json
import math
import os
from dataclasses import dataclass

from . import bounds, identities, specfun
from .errors import DomainError, NonConvergenceError
from .quadrature import DecayHint, integrate_finite, integrate_log_singular, \
    integrate_semi_infinite

TOOL_VERSION = "0.1.0"

DEFAULT_BOUNDS_GRID = (0.01, 100.0, 25)

_PROFILE_FIELDS = ("quad_tol", "identity_tol", "series_tol", "constants_tol")


@dataclass(frozen=True)
class ToleranceProfile:
    quad_tol: float = 1e-10
    identity_tol: float = 1e-7
    series_tol: float = 1e-14
    constants_tol: float = 1e-5

    def __post_init__(self):
        for name in _PROFILE_FIELDS:
            if not (getattr(self, name) > 0.0):
                raise DomainError(f"profile field {name} must be positive")
        if self.identity_tol < self.quad_tol:
            raise DomainError("identity_tol must be >= quad_tol")

    @classmethod
    def from_file(cls, path: str) -> "ToleranceProfile":
        """Parse a simple key=value profile file."""
        values = {}
        with open(path, "r", encoding="utf-8") as fh:
            for raw in fh:
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise DomainError(f"bad profile line {raw!r}")
                key, _, val = line.partition("=")
                key = key.strip()
                if key not in _PROFILE_FIELDS:
                    raise DomainError(f"unknown profile key {key!r}")
                values[key] = float(val.strip())
        return cls(**values)

    @classmethod
    def from_environment(cls) -> "ToleranceProfile":
        path = os.environ.get("XILAB_PROFILE")
        return cls.from_file(path) if path else cls()

    def replace(self, **kwargs) -> "ToleranceProfile":
        merged = {f: getattr(self, f) for f in _PROFILE_FIELDS}
        merged.update({k: v for k, v in kwargs.items() if v is not None})
        return ToleranceProfile(**merged)


@dataclass
class SelftestResult:
    name: str
    passed: bool
    detail: str


# ---------------------------------------------------------------------------
# Selftest battery
# ---------------------------------------------------------------------------

def _simpson_k0(x: float) -> float:
    """Independent K0 oracle: composite Simpson on exp(-x cosh u)."""
    upper = math.acosh(745.0 / x) if x < 745.0 else 1.0

    def once(n):
        h = upper / n
        acc = math.exp(-x) + math.exp(-x * math.cosh(upper))
        for i in range(1, n):
            acc += (4.0 if i % 2 else 2.0) * math.exp(-x * math.cosh(i * h))
        return acc * h / 3.0

    coarse, fine = once(4096), once(8192)
    return fine + (fine - coarse) / 15.0


def _eta_zeta_oracle(s: float, n: int = 48) -> float:
    """Alternating-series zeta oracle with binomial-Chebyshev acceleration."""
    d = (3.0 + math.sqrt(8.0)) ** n
    d = 0.5 * (d + 1.0 / d)
    b, c, acc = -1.0, -d, 0.0
    for k in range(n):
        c = b - c
        acc += c * (k + 1.0) ** (-s)
        b *= 2.0 * (k + n) * (k - n) / ((2.0 * k + 1.0) * (k + 1.0))
    eta = acc / d
    return eta / (1.0 - 2.0 ** (1.0 - s))


def _log_grid(lo, hi, n):
    return bounds.log_grid(lo, hi, n)


def _lin_grid(lo, hi, n):
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def _check(fn):
    """Run a check body; map exceptions to a failed result detail."""
    try:
        return fn()
    except NonConvergenceError as exc:
        raise
    except Exception as exc:  # noqa: BLE001 - report, do not crash the battery
        return False, f"raised {type(exc).__name__}: {exc}"


def _selftest_checks(profile: ToleranceProfile):
    """Ordered (name, body) pairs; bodies return (passed, detail)."""
    qt = profile.quad_tol

    def digamma_euler():
        err = abs(specfun.digamma(1.0) + specfun.EULER_GAMMA)
        return err < 1e-14, f"|psi(1)+gamma|={err:.2e}"

    def digamma_recurrence():
        worst = max(abs(specfun.digamma(x + 1.0) - specfun.digamma(x) - 1.0 / x)
                    for x in _lin_grid(0.1, 50.0, 113))
        return worst <= 1e-12, f"worst={worst:.2e}"

    def digamma_quarter():
        closed = -specfun.EULER_GAMMA - 0.5 * math.pi - 3.0 * math.log(2.0)
        err = abs(specfun.digamma(0.25) - closed) / abs(closed)
        return err < 1e-13, f"rel={err:.2e}"

    def polygamma_zeta_values():
        e1 = abs(specfun.polygamma(1, 1.0) - math.pi ** 2 / 6.0)
        e2 = abs(specfun.polygamma(2, 1.0) + 2.0 * 1.2020569031595942854)
        return e1 < 1e-13 and e2 < 1e-12, f"psi'(1) err={e1:.2e}, psi''(1) err={e2:.2e}"

    def gamma_integers():
        worst = max(abs(math.exp(specfun.log_gamma(float(n)).real)
                        - math.factorial(n - 1)) / math.factorial(n - 1)
                    for n in range(1, 13))
        return worst < 1e-12, f"worst rel={worst:.2e}"

    def zeta_basel():
        err = abs(specfun.zeta(2.0 + 0.0j) - math.pi ** 2 / 6.0)
        return err < 1e-12, f"abs={err:.2e}"

    def zeta_half_eta():
        oracle = _eta_zeta_oracle(0.5)
        err = abs(specfun.zeta(0.5 + 0.0j).real - oracle) / abs(oracle)
        return err < 1e-12, f"rel vs eta oracle={err:.2e}"

    def zeta_eta_grid():
        worst = max(abs(specfun.zeta(complex(s, 0.0)).real - _eta_zeta_oracle(s))
                    / abs(_eta_zeta_oracle(s))
                    for s in (0.45, 0.9, 1.5, 2.5))
        return worst < 1e-12, f"worst rel={worst:.2e}"

    def zeta_first_zero():
        mag = abs(specfun.zeta(complex(0.5, 14.1347251417)))
        return mag < 1e-9, f"|zeta|={mag:.2e}"

    def xi_zero_located():
        lo, hi = 14.0, 14.3
        flo = specfun.xi_upper(lo)
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            fm = specfun.xi_upper(mid)
            if flo * fm <= 0.0:
                hi = mid
            else:
                lo, flo = mid, fm
        root = 0.5 * (lo + hi)
        err = abs(root - 14.1347251417)
        return err <= 1e-6, f"root={root:.10f}, delta={err:.2e}"

    def xi_origin():
        err = abs(specfun.xi_upper(0.0) - 0.4971207781883141) / 0.4971207781883141
        return err < 1e-12, f"rel={err:.2e}"

    def xi_even():
        worst = max(abs(specfun.xi_upper(t) - specfun.xi_upper(-t))
                    / max(abs(specfun.xi_upper(t)), 1e-300)
                    for t in _lin_grid(0.0, 30.0, 16) if t > 0.0)
        return worst <= 1e-12, f"worst rel={worst:.2e}"

    def poch_conjugate():
        ok = all(specfun.gamma_ratio_poch(m, -t)
                 == specfun.gamma_ratio_poch(m, t).conjugate()
                 for m in range(9) for t in (0.0, 0.5, 2.0, 17.5))
        return ok, "exact equality" if ok else "conjugate symmetry broken"

    def poch_vs_log_gamma():
        z = complex(0.5, 2.0)
        via_gamma = cmath.exp(specfun.log_gamma(z + 3) - specfun.log_gamma(z))
        err = abs(specfun.gamma_ratio_poch(3, 2.0) - via_gamma)
        return err < 1e-12, f"abs={err:.2e}"

    def k0_point_values():
        err1 = abs(specfun.bessel_k0(1.0) - 0.42102443824070834) / 0.42102443824070834
        err2 = abs(specfun.bessel_k0(20.0) - 5.7412378153365243e-10) / 5.7412378153365243e-10
        small = specfun.bessel_k0(20.0) < math.exp(-20.0)
        return err1 < 1e-12 and err2 < 1e-12 and small, \
            f"K0(1) rel={err1:.2e}, K0(20) rel={err2:.2e}"

    def k0_integral_oracle():
        worst = max(abs(specfun.bessel_k0(x) - _simpson_k0(x))
                    / abs(_simpson_k0(x)) for x in (0.7, 1.0, 2.5, 6.0, 12.0))
        return worst < 1e-12, f"worst rel vs Simpson oracle={worst:.2e}"

    def k0_small_log():
        x = 1e-4
        lead = -math.log(0.5 * x) - specfun.EULER_GAMMA
        err = abs(specfun.bessel_k0(x) - lead)
        return err < 1e-7, f"|K0 - leading log|={err:.2e}"

    def lattice_dual_path():
        worst = max(abs(specfun._lattice_sum_direct(a)
                        - specfun._lattice_sum_poisson(a))
                    for a in _lin_grid(0.5, 2.0, 7))
        return worst <= 1e-10, f"worst={worst:.2e}"

    def lattice_values():
        err = abs(specfun.k0_lattice_sum(5.0) + 1.2418011527585853)
        lead = 2.0 * (specfun.EULER_GAMMA + math.log(0.01 / (4.0 * math.pi)))
        asym = abs(specfun.k0_lattice_sum(0.01) - lead)
        return err < 1e-12 and asym < 1e-5, f"S(5) err={err:.2e}, small-a log gap={asym:.2e}"

    def theta_values():
        closed = (math.pi ** 0.25 / 1.2254167024651776 - 1.0) / 2.0
        err = abs(specfun.theta_rest(1.0) - closed) / closed
        single = abs(specfun.theta_rest(100.0)) < 1e-130
        alg = abs(specfun.theta_rest(0.01)
                  - 0.5 * (10.0 * (1.0 + 2.0 * specfun.theta_rest(100.0)) - 1.0))
        return err < 1e-12 and single and alg < 1e-15, \
            f"R(1) rel={err:.2e}, transform gap={alg:.2e}"

    def theta_transform_grid():
        worst = 0.0
        for t in _lin_grid(-3.0, 3.0, 25):
            lhs = (math.exp(0.5 * t)
                   - 2.0 * math.exp(-0.5 * t) * specfun.theta_rest(math.exp(-2.0 * t)))
            rhs = (math.exp(-0.5 * t)
                   - 2.0 * math.exp(0.5 * t) * specfun.theta_rest(math.exp(2.0 * t)))
            worst = max(worst, abs(lhs - rhs))
        return worst <= 1e-12, f"worst={worst:.2e}"

    def erf_checks():
        odd = max(abs(specfun.erf_family("erf", x) + specfun.erf_family("erf", -x))
                  for x in (0.3, 1.0, 2.5))
        comp = max(abs(specfun.erf_family("erf", x) + specfun.erf_family("erfc", x) - 1.0)
                   for x in (0.0, 0.5, 2.0, 5.0))
        erfi_err = abs(specfun.erf_family("erfi", 1.0) - 1.6504257587975428) \
            / 1.6504257587975428
        erfc_err = abs(specfun.erf_family("erfc", 2.0) - 0.004677734981047266) \
            / 0.004677734981047266
        ok = odd == 0.0 and comp < 1e-15 and erfi_err < 1e-13 and erfc_err < 1e-13
        return ok, f"erfi(1) rel={erfi_err:.2e}, erfc(2) rel={erfc_err:.2e}"

    def ei_checks():
        e1 = abs(specfun.expint_ei(-1.0) + 0.21938393439552028) / 0.21938393439552028
        seam = abs(specfun.expint_ei(-0.999) - specfun.expint_ei(-1.001))
        tail = specfun.expint_ei(-30.0)
        ok = e1 < 1e-13 and seam < 1e-3 and -1.2e-14 < tail < 0.0
        return ok, f"Ei(-1) rel={e1:.2e}, Ei(-30)={tail:.3e}"

    def log_gaussian_closed_form():
        worst = 0.0
        for a in (0.25, 1.0, 100.0):
            quad = integrate_log_singular(
                lambda t: math.exp(-a * t * t) * math.log(t), 1.0, 1e-12)
            tail = integrate_semi_infinite(
                lambda t: math.exp(-a * t * t) * math.log(t) if a * t * t < 708 else 0.0,
                1.0, 1e-12, DecayHint("gaussian", a))
            worst = max(worst, abs(quad.value + tail.value
                                   - specfun.log_gaussian_moment(a)))
        return worst < 1e-11, f"worst abs={worst:.2e}"

    def quad_honesty_battery():
        battery = [
            (lambda t: 1.0, 0.0, 1.0, 1.0),
            (lambda t: t * t, 0.0, 1.0, 1.0 / 3.0),
            (lambda t: t ** 5, 0.0, 2.0, 64.0 / 6.0),
            (math.exp, 0.0, 1.0, math.e - 1.0),
            (math.sin, 0.0, math.pi, 2.0),
            (lambda t: math.cos(5.0 * t), 0.0, 2.0, math.sin(10.0) / 5.0),
            (lambda t: 1.0 / (1.0 + t * t), 0.0, 1.0, math.pi / 4.0),
            (lambda t: math.exp(-t) * t, 0.0, 10.0, 1.0 - 11.0 * math.exp(-10.0)),
            (lambda t: math.sqrt(t), 0.0, 1.0, 2.0 / 3.0),
            (lambda t: math.log(1.0 + t), 0.0, 1.0, 2.0 * math.log(2.0) - 1.0),
        ]
        worst_ratio = 0.0
        for f, a, b, exact in battery:
            res = integrate_finite(f, a, b, qt)
            if not res.converged:
                return False, "battery integral did not converge"
            diff = abs(res.value - exact)
            worst_ratio = max(worst_ratio,
                              diff / max(5.0 * res.abs_err_estimate, 2.5e-16))
        return worst_ratio <= 1.0, f"worst |diff|/(5 err)={worst_ratio:.3f}"

    def quad_linearity():
        f = math.exp
        g = math.sin
        fi = integrate_finite(f, 0.0, 1.0, qt)
        gi = integrate_finite(g, 0.0, 1.0, qt)
        both = integrate_finite(lambda t: 2.0 * f(t) + 3.0 * g(t), 0.0, 1.0, qt)
        gap = abs(both.value - 2.0 * fi.value - 3.0 * gi.value)
        budget = 2.0 * (both.abs_err_estimate
                        + 2.0 * fi.abs_err_estimate + 3.0 * gi.abs_err_estimate)
        return gap <= max(budget, 1e-15), f"gap={gap:.2e}"

    def quad_determinism():
        r1 = integrate_semi_infinite(lambda t: math.exp(-t * t), 0.0, qt,
                                     DecayHint("gaussian", 1.0))
        r2 = integrate_semi_infinite(lambda t: math.exp(-t * t), 0.0, qt,
                                     DecayHint("gaussian", 1.0))
        same = (r1.value == r2.value
                and r1.abs_err_estimate == r2.abs_err_estimate
                and r1.evaluations == r2.evaluations)
        return same, "bit-identical reruns" if same else "nondeterministic"

    def digamma_inequality():
        ok = all(0.5 / x - 1.0 / (12.0 * x * x) < specfun.psibar(0, x) < 0.5 / x
                 for x in _log_grid(1e-3, 1e3, 61))
        return ok, "strict on log-grid(1e-3,1e3)"

    def psibar_positive():
        ok = all(specfun.psibar(0, t) > 0.0 for t in _log_grid(1e-6, 1e6, 49))
        return ok, "positive on log-grid(1e-6,1e6)"

    def psibar_fd_consistency():
        t0, h = 2.0, 1e-3
        d1 = (specfun.psibar(0, t0 + h) - specfun.psibar(0, t0 - h)) / (2.0 * h)
        d2 = (specfun.psibar(0, t0 + h / 2) - specfun.psibar(0, t0 - h / 2)) / h
        extrap = (4.0 * d2 - d1) / 3.0
        err = abs(specfun.psibar(1, t0) - extrap)
        return err < 1e-9, f"Richardson gap={err:.2e}"

    return [
        ("digamma_euler", digamma_euler),
        ("digamma_recurrence", digamma_recurrence),
        ("digamma_quarter", digamma_quarter),
        ("polygamma_zeta_values", polygamma_zeta_values),
        ("gamma_integers", gamma_integers),
        ("zeta_basel", zeta_basel),
        ("zeta_half_eta", zeta_half_eta),
        ("zeta_eta_grid", zeta_eta_grid),
        ("zeta_first_zero", zeta_first_zero),
        ("xi_zero_located", xi_zero_located),
        ("xi_origin", xi_origin),
        ("xi_even", xi_even),
        ("poch_conjugate", poch_conjugate),
        ("poch_vs_log_gamma", poch_vs_log_gamma),
        ("k0_point_values", k0_point_values),
        ("k0_integral_oracle", k0_integral_oracle),
        ("k0_small_log", k0_small_log),
        ("lattice_dual_path", lattice_dual_path),
        ("lattice_values", lattice_values),
        ("theta_values", theta_values),
        ("theta_transform_grid", theta_transform_grid),
        ("erf_checks", erf_checks),
        ("ei_checks", ei_checks),
        ("log_gaussian_closed_form", log_gaussian_closed_form),
        ("quad_honesty_battery", quad_honesty_battery),
        ("quad_linearity", quad_linearity),
        ("quad_determinism", quad_determinism),
        ("digamma_inequality", digamma_inequality),
        ("psibar_positive", psibar_positive),
        ("psibar_fd_consistency", psibar_fd_consistency),
    ]


def run_selftest(profile: ToleranceProfile) -> list[SelftestResult]:
    """Run the kernel oracle battery in a fixed order."""
    out = []
    for name, body in _selftest_checks(profile):
        passed, detail = _check(body)
        out.append(SelftestResult(name, bool(passed), detail))
    return out


# ---------------------------------------------------------------------------
# Full report
# ---------------------------------------------------------------------------

def _case_informational(case: identities.IdentityCase) -> bool:
    """Printed variants of disputed families carry evidence, not CI state."""
    return (case.name in identities.VARIANT_FAMILIES
            and case.variant.form == "printed")


def run_cases(triples, profile: ToleranceProfile, jobs: int = 1):
    """Verify (name, params, variant) triples, preserving order."""
    def one(triple):
        name, params, variant = triple
        return identities.verify(name, params, variant,
                                 identity_tol=profile.identity_tol,
                                 quad_tol=profile.quad_tol)

    if jobs <= 1:
        return [one(t) for t in triples]
    with concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(one, triples))


def run_bounds(grid_spec, profile: ToleranceProfile):
    """Bounds scan plus the constants and squeeze blocks."""
    lo, hi, npts = grid_spec
    grid = bounds.log_grid(lo, hi, int(npts))
    rows = bounds.scan_bounds(grid, quad_tol=profile.quad_tol)
    c1_hat, c2_hat = bounds.recompute_constants()
    finite_rows = [r for r in rows if math.isfinite(r.i_value)]
    ratio = (finite_rows[-1].i_value / finite_rows[0].i_value
             if len(finite_rows) >= 2 else math.nan)
    edge_lo = bounds.hardy_integral(1e-3, profile.quad_tol).value
    edge_hi = bounds.hardy_integral(1e6, profile.quad_tol).value
    constants = {
        "c1_printed": bounds.PAPER.c1,
        "c1_recomputed": c1_hat,
        "c1_delta": c1_hat - bounds.PAPER.c1,
        "c2_printed": bounds.PAPER.c2,
        "c2_recomputed": c2_hat,
        "c2_delta": c2_hat - bounds.PAPER.c2,
        "within_tolerance": bool(abs(c1_hat - bounds.PAPER.c1) <= profile.constants_tol
                                 and abs(c2_hat - bounds.PAPER.c2) <= profile.constants_tol),
    }
    squeeze = {
        "grid_ratio": ratio,
        "stated_threshold": 1e-2,
        "grid_ratio_below_threshold": bool(ratio < 1e-2),
        "domain_edge_ratio": edge_hi / edge_lo,
        "domain_edge_below_threshold": bool(edge_hi / edge_lo < 1e-2),
        "note": ("informational: I decays like log(y)/sqrt(y), so the stated "
                 "threshold is only met over the full domain, not the "
                 "default grid"),
    }
    return rows, constants, squeeze


def variant_evidence(cases, rows) -> list[dict]:
    """The misprint ledger: printed vs corrected behavior, side by side."""
    out = []
    for family in identities.VARIANT_FAMILIES:
        printed = [c for c in cases
                   if c.name == family and c.variant.form == "printed"]
        corrected = [c for c in cases
                     if c.name == family and c.variant.form == "corrected"]
        if not printed and not corrected:
            continue
        out.append({
            "family": family,
            "printed_verdicts": [c.verdict for c in printed],
            "corrected_verdicts": [c.verdict for c in corrected],
            "corrected_note": corrected[0].variant.note if corrected else "",
        })
    if rows:
        exceed = sum(1 for r in rows
                     if math.isfinite(r.lower_printed)
                     and r.lower_printed > r.i_value + r.i_abs_err)
        out.append({
            "family": "bounds_lower",
            "printed_exceeds_integral_rows": exceed,
            "total_rows": len(rows),
            "corrected_note": ("derived variant uses 2 c1^2 in place of "
                               "(2 c1)^2 and erfc in place of the final erfi"),
        })
    out.append({
        "family": "k0_lattice_argument",
        "corrected_note": ("the lattice sum uses spacing a with residue "
                           "2 pi/a; the printed summand argument n pi x is "
                           "inconsistent with that residue and is not used"),
    })
    return out


@dataclass
class RunReport:
    tool_version: str
    profile: ToleranceProfile
    selftest: list
    cases: list
    bounds_rows: list
    constants: dict | None
    squeeze: dict | None
    evidence: list
    overall: str


def build_report(profile: ToleranceProfile, selector: str = "all",
                 grid_spec=DEFAULT_BOUNDS_GRID, jobs: int = 1,
                 with_selftest: bool = True,
                 with_bounds: bool = True) -> RunReport:
    selftest = run_selftest(profile) if with_selftest else []
    triples = identities.default_cases(selector) if selector else []
    cases = run_cases(triples, profile, jobs) if triples else []
    if with_bounds:
        rows, constants, squeeze = run_bounds(grid_spec, profile)
    else:
        rows, constants, squeeze = [], None, None
    overall = "PASS"
    if any(not s.passed for s in selftest):
        overall = "FAIL"
    for case in cases:
        if _case_informational(case):
            continue
        if case.verdict not in (identities.PASS, identities.SKIPPED):
            overall = "FAIL"
    for row in rows:
        if not row.sandwich_ok_derived or "nonpositive" in row.flags \
                or "monotonicity-break" in row.flags:
            overall = "FAIL"
    if constants is not None and not constants["within_tolerance"]:
        overall = "FAIL"
    return RunReport(TOOL_VERSION, profile, selftest, cases, rows,
                     constants, squeeze,
                     variant_evidence(cases, rows), overall)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def _num(x):
    """JSON-safe number: null for non-finite floats."""
    if isinstance(x, float) and not math.isfinite(x):
        return None
    return x


def _residual_3sig(r: float):
    if not math.isfinite(r):
        return None
    return float(f"{r:.3g}")


def _quad_dict(q):
    if q is None:
        return None
    if isinstance(q.value, complex):
        value = {"re": _num(q.value.real), "im": _num(q.value.imag)}
    else:
        value = _num(q.value)
    return {
        "value": value,
        "abs_err_estimate": _num(q.abs_err_estimate),
        "evaluations": q.evaluations,
        "converged": q.converged,
    }


def _params_dict(params):
    out = {}
    for key in sorted(params):
        val = params[key]
        if isinstance(val, complex):
            out["beta_re"] = val.real
            out["beta_im"] = val.imag
        else:
            out[key] = val
    return out


def report_to_dict(report: RunReport) -> dict:
    return {
        "tool_version": report.tool_version,
        "profile": {f: getattr(report.profile, f) for f in _PROFILE_FIELDS},
        "selftest": [{"name": s.name, "passed": s.passed, "detail": s.detail}
                     for s in report.selftest],
        "cases": [{
            "name": c.name,
            "variant": c.variant.form,
            "variant_note": c.variant.note,
            "informational": _case_informational(c),
            "params": _params_dict(c.params),
            "lhs": _quad_dict(c.lhs),
            "rhs": _quad_dict(c.rhs),
            "residual": _residual_3sig(c.residual),
            "verdict": c.verdict,
            "note": c.note,
        } for c in report.cases],
        "bounds": {
            "constants": ({k: _num(v) if isinstance(v, float) else v
                           for k, v in report.constants.items()}
                          if report.constants else None),
            "squeeze": ({k: _num(v) if isinstance(v, float) else v
                         for k, v in report.squeeze.items()}
                        if report.squeeze else None),
            "rows": [{
                "y": _num(r.y),
                "lower_printed": _num(r.lower_printed),
                "lower_derived": _num(r.lower_derived),
                "i_value": _num(r.i_value),
                "i_abs_err": _num(r.i_abs_err),
                "upper_derived": _num(r.upper_derived),
                "upper_printed": _num(r.upper_printed),
                "sandwich_ok_derived": r.sandwich_ok_derived,
                "sandwich_ok_printed": r.sandwich_ok_printed,
                "flags": r.flags,
            } for r in report.bounds_rows],
        },
        "variant_evidence": report.evidence,
        "overall": report.overall,
    }


def report_to_json(report: RunReport) -> str:
    return json.dumps(report_to_dict(report), indent=2, allow_nan=False) + "\n"


CASES_CSV_HEADER = ("name,variant,x,m,n,beta_re,beta_im,lhs_re,lhs_im,"
                    "lhs_err,rhs_re,rhs_im,rhs_err,residual,verdict,note")
BOUNDS_CSV_HEADER = ("y,lower_printed,lower_derived,I,upper_derived,"
                     "upper_printed,flags")
SELFTEST_CSV_HEADER = "name,passed,detail"


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        if not math.isfinite(x):
            return ""
        return format(x, ".17g")
    return str(x)


def cases_to_csv(cases) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CASES_CSV_HEADER.split(","))
    for c in cases:
        p = c.params
        beta = complex(p["beta"]) if "beta" in p else None
        def split(q):
            if q is None or (isinstance(q.value, float) and not math.isfinite(q.value)):
                return "", "", "" if q is None else _fmt(q.abs_err_estimate)
            if isinstance(q.value, complex):
                return _fmt(q.value.real), _fmt(q.value.imag), _fmt(q.abs_err_estimate)
            return _fmt(q.value), "", _fmt(q.abs_err_estimate)
        l_re, l_im, l_err = split(c.lhs)
        r_re, r_im, r_err = split(c.rhs)
        writer.writerow([
            c.name, c.variant.form,
            _fmt(p.get("x")), _fmt(p.get("m")), _fmt(p.get("n")),
            _fmt(beta.real if beta is not None else None),
            _fmt(beta.imag if beta is not None else None),
            l_re, l_im, l_err, r_re, r_im, r_err,
            _fmt(_residual_3sig(c.residual)), c.verdict, c.note,
        ])
    return buf.getvalue()


def bounds_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(BOUNDS_CSV_HEADER.split(","))
    for r in rows:
        writer.writerow([_fmt(r.y), _fmt(r.lower_printed), _fmt(r.lower_derived),
                         _fmt(r.i_value), _fmt(r.upper_derived),
                         _fmt(r.upper_printed), r.flags])
    return buf.getvalue()


def selftest_to_csv(results) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SELFTEST_CSV_HEADER.split(","))
    for s in results:
        writer.writerow([s.name, "pass" if s.passed else "fail", s.detail])
    return buf.getvalue()
