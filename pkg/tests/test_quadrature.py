"""Engine contracts: exactness, the tabulated integrals, error-estimate
honesty, linearity, determinism, and the tail/hint machinery."""

import math

import pytest

import _oracles as o
from xilab import specfun as sf
from xilab.errors import DomainError, HintViolationError
from xilab.quadrature import DecayHint, integrate_finite, \
    integrate_log_singular, integrate_semi_infinite


def test_constant_and_polynomial_exact():
    r = integrate_finite(lambda t: 1.0, 0.0, 1.0, 1e-12)
    assert r.converged and abs(r.value - 1.0) < 1e-15
    r = integrate_finite(lambda t: t * t, 0.0, 1.0, 1e-12)
    assert r.converged and abs(r.value - 1.0 / 3.0) < 1e-15


def test_square_integral_of_digamma_difference():
    # tabulated as 1.56624 (6 digits)
    r = integrate_log_singular(lambda t: sf.psibar(0, t) ** 2, 1.0, 1e-8)
    assert r.converged
    assert abs(r.value - 1.56624) < 5e-6
    assert abs(r.value - o.C2_TRUE) < 1e-8


def test_sqrt_integral_of_digamma_difference():
    # tabulated as 0.952894 (6 digits)
    r = integrate_log_singular(lambda t: math.sqrt(sf.psibar(0, t)), 1.0, 1e-9)
    assert r.converged
    assert abs(r.value - 0.952894) < 5e-7
    assert abs(r.value - o.C1_TRUE) < 1e-9


def test_gaussian_halfline():
    r = integrate_semi_infinite(lambda t: math.exp(-t * t), 0.0, 1e-12,
                                DecayHint("gaussian", 1.0))
    assert r.converged and abs(r.value - math.sqrt(math.pi) / 2.0) < 1e-12


def test_normalized_gaussian():
    r = integrate_semi_infinite(lambda t: math.exp(-math.pi * t * t), 0.0,
                                1e-12, DecayHint("gaussian", math.pi))
    assert r.converged and abs(r.value - 0.5) < 1e-12


def test_xi_kernel_halfline_matches_frozen_oracle():
    def f(t):
        e = math.exp(-abs(math.pi * t))
        sech = 2.0 * e / (1.0 + e * e)
        return sf.xi_upper(t) / (t * t + 0.25) * sech

    r = integrate_semi_infinite(f, 0.0, 1e-10,
                                DecayHint("exponential", math.pi), min_t=35.0)
    assert r.converged
    assert abs(r.value - o.I_PI) < 1e-10  # equals the Gaussian-kernel value


def test_log_singularity_exact_antiderivatives():
    r = integrate_log_singular(lambda t: -math.log(t), 1.0, 1e-12)
    assert r.converged and abs(r.value - 1.0) < 1e-12
    r = integrate_log_singular(lambda t: -o.EULER_GAMMA - math.log(t), 1.0, 1e-12)
    assert r.converged and abs(r.value - (1.0 - o.EULER_GAMMA)) < 1e-12


def test_error_estimate_honesty_battery():
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
    for f, a, b, exact in battery:
        res = integrate_finite(f, a, b, 1e-10)
        assert res.converged
        assert abs(res.value - exact) <= max(5.0 * res.abs_err_estimate, 3e-16)


def test_linearity_within_error_budget():
    f, g = math.exp, math.sin
    fi = integrate_finite(f, 0.0, 1.0, 1e-11)
    gi = integrate_finite(g, 0.0, 1.0, 1e-11)
    both = integrate_finite(lambda t: 2.0 * f(t) + 3.0 * g(t), 0.0, 1.0, 1e-11)
    budget = 2.0 * (both.abs_err_estimate + 2.0 * fi.abs_err_estimate
                    + 3.0 * gi.abs_err_estimate)
    assert abs(both.value - 2.0 * fi.value - 3.0 * gi.value) <= max(budget, 1e-15)


def test_bit_identical_reruns():
    def f(t):
        return math.exp(-t) * math.cos(3.0 * t)

    hint = DecayHint("exponential", 1.0)
    r1 = integrate_semi_infinite(f, 0.0, 1e-11, hint)
    r2 = integrate_semi_infinite(f, 0.0, 1e-11, hint)
    assert r1 == r2


def test_nonconvergence_reports_best_estimate():
    # needle the adaptive engine cannot resolve within 40 panels
    def f(t):
        return 1.0 / math.sqrt(abs(t - 0.123456789) + 1e-15)

    r = integrate_finite(f, 0.0, 1.0, 1e-14, max_panels=40)
    assert not r.converged
    assert r.abs_err_estimate > 1e-14
    assert math.isfinite(r.value)


def test_converged_implies_estimate_below_tolerance():
    r = integrate_finite(math.exp, 0.0, 1.0, 1e-9)
    assert r.converged and r.abs_err_estimate <= 1e-9
    assert r.evaluations > 0


def test_degenerate_and_invalid_intervals():
    r = integrate_finite(math.exp, 2.0, 2.0, 1e-10)
    assert r.value == 0.0 and r.converged
    with pytest.raises(DomainError):
        integrate_finite(math.exp, 1.0, 0.0, 1e-10)
    with pytest.raises(DomainError):
        integrate_finite(math.exp, 0.0, 1.0, -1e-10)


def test_hint_violation_detected():
    # claims gaussian decay but only decays exponentially
    with pytest.raises(HintViolationError):
        integrate_semi_infinite(lambda t: math.exp(-0.3 * t), 0.0, 1e-10,
                                DecayHint("gaussian", 2.0))


def test_decay_hint_validation():
    with pytest.raises(DomainError):
        DecayHint("sublinear", 1.0)
    with pytest.raises(DomainError):
        DecayHint("gaussian", 0.0)


def test_tail_bound_in_error_estimate():
    # the reported estimate must cover the certified tail truncation
    hint = DecayHint("exponential", 1.0)
    r = integrate_semi_infinite(lambda t: math.exp(-t), 0.0, 1e-8, hint)
    assert r.converged
    assert abs(r.value - 1.0) <= max(5.0 * r.abs_err_estimate, 1e-14)


def test_super_exponential_hint():
    r = integrate_semi_infinite(lambda t: math.exp(-t * t * t - t), 0.0, 1e-10,
                                DecayHint("super_exponential", 1.0))
    brute = o.simpson(lambda t: math.exp(-t * t * t - t), 0.0, 12.0)
    assert r.converged and abs(r.value - brute) < 1e-9


def test_polynomial_times_exponential_hint():
    r = integrate_semi_infinite(lambda t: t ** 3 * math.exp(-2.0 * t), 0.0,
                                1e-10, DecayHint("polynomial_times_exponential", 2.0))
    assert r.converged and abs(r.value - 6.0 / 16.0) < 1e-10
