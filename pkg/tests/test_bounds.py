"""Bounds suite: I(y) against frozen oracles, recomputed constants,
printed-vs-derived bound behavior, and the full sandwich scan."""

import math

import pytest

import _oracles as o
from xilab import bounds as bd
from xilab.errors import DomainError


@pytest.mark.parametrize("y,want", [
    (0.01, o.I_001), (1.0, o.I_1), (math.pi, o.I_PI),
    (100.0, o.I_100), (1e4, o.I_1E4),
])
def test_hardy_integral_frozen(y, want):
    r = bd.hardy_integral(y)
    assert r.converged
    assert abs(r.value - want) < 1e-10


def test_hardy_integral_squeeze_toward_zero():
    assert bd.hardy_integral(1e4).value < bd.hardy_integral(1.0).value / 10.0


def test_hardy_integral_domain():
    with pytest.raises(DomainError):
        bd.hardy_integral(1e-4)
    with pytest.raises(DomainError):
        bd.hardy_integral(2e6)


def test_recomputed_constants_match_tabulated_values():
    c1, c2 = bd.recompute_constants()
    assert abs(c1 - 0.952894) <= 5e-7
    assert abs(c2 - 1.56624) <= 5e-6
    assert abs(c1 - o.C1_TRUE) < 1e-9
    assert abs(c2 - o.C2_TRUE) < 1e-8


def test_constants_cauchy_schwarz_consistency():
    # (int f^(1/2))^2 <= int f on (0,1]; the middle integral is exactly 1
    c1, _ = bd.recompute_constants()
    from xilab.quadrature import integrate_log_singular
    from xilab import specfun as sf
    mid = integrate_log_singular(lambda t: sf.psibar(0, t), 1.0, 1e-10)
    assert abs(mid.value - o.MID_INT) < 1e-9
    assert c1 * c1 <= mid.value + 1e-9


def test_lower_bound_variants_at_one():
    i1 = bd.hardy_integral(1.0).value
    lo_d = bd.lower_bound(1.0, "derived")
    lo_p = bd.lower_bound(1.0, "printed")
    assert lo_d <= i1
    assert lo_p > i1  # printed form already fails at y = 1


def test_lower_bound_printed_blows_up():
    # the erfi growth makes the printed form exceed I(y) massively
    i50 = bd.hardy_integral(50.0).value
    lo_p = bd.lower_bound(50.0, "printed")
    assert lo_p > 1e15 * i50
    assert bd.lower_bound(50.0, "derived") <= i50


def test_lower_bound_derived_decays_to_zero():
    prev = None
    for y in (10.0, 50.0, 100.0, 140.0):
        v = bd.lower_bound(y, "derived")
        assert v > 0.0 or y <= 10.0
        if prev is not None:
            assert v < prev
        prev = v
    assert bd.lower_bound(140.0, "derived") < 1e-50


def test_upper_bound_variants():
    i1 = bd.hardy_integral(1.0).value
    up_d = bd.upper_bound(1.0, "derived")
    up_p = bd.upper_bound(1.0, "printed")
    assert up_d >= i1
    assert up_p >= up_d  # printed is looser by sqrt(2) in the radical
    # radical factor check: (pi/2y)/(pi/8y) = 4 inside the sqrt
    inner_p = bd.PAPER.c2 * math.sqrt(math.pi / 2.0) * math.erf(math.sqrt(2.0))
    inner_d = bd.PAPER.c2 * math.sqrt(math.pi / 8.0) * math.erf(math.sqrt(2.0))
    assert abs(inner_p / inner_d - 2.0) < 1e-12


def test_upper_bound_vanishes_at_infinity():
    assert bd.upper_bound(1e6, "derived") < 1e-2
    assert bd.upper_bound(1e6, "printed") < 2e-2


def test_erfi_clamp_flag():
    rows = bd.scan_bounds([145.0])
    assert "overflow-clamped" in rows[0].flags
    assert math.isfinite(rows[0].lower_printed)


def test_scan_default_grid():
    rows = bd.scan_bounds(bd.log_grid(0.01, 100.0, 25))
    assert len(rows) == 25
    assert all(r.sandwich_ok_derived for r in rows)
    assert all(r.i_value > 0.0 for r in rows)
    assert not any("monotonicity-break" in r.flags for r in rows)
    # printed lower bound exceeds the integral on this grid: documented
    assert all(not r.sandwich_ok_printed for r in rows)


def test_scan_monotone_within_margins():
    rows = bd.scan_bounds(bd.log_grid(0.1, 10.0, 9))
    for a, b in zip(rows, rows[1:]):
        assert b.i_value <= a.i_value + 2.0 * (a.i_abs_err + b.i_abs_err)


def test_scan_aggregates_out_of_domain_rows():
    rows = bd.scan_bounds([0.5, 2e6])
    assert len(rows) == 2
    assert rows[0].sandwich_ok_derived
    assert rows[1].flags == "quad-error"
    assert math.isnan(rows[1].i_value)


def test_log_grid_contract():
    g = bd.log_grid(0.01, 100.0, 25)
    assert len(g) == 25
    assert abs(g[0] - 0.01) < 1e-15 and abs(g[-1] - 100.0) < 1e-10
    with pytest.raises(DomainError):
        bd.log_grid(1.0, 0.5, 10)


def test_paper_constants_frozen():
    assert bd.PAPER.c1 == 0.952894
    assert bd.PAPER.c2 == 1.56624
    assert abs(bd.PAPER.gamma - 0.5772156649015329) == 0.0
