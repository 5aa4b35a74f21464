"""Identity evaluators: frozen-oracle values, the cross-family bridges,
variant behavior (printed vs corrected), and the verify harness."""

import math

import pytest

import _oracles as o
from xilab import bounds, identities as idn, specfun as sf
from xilab.errors import DomainError


def rel(got, want):
    return abs(got - want) / max(abs(want), 1e-300)


# --- hardy11 -----------------------------------------------------------------

@pytest.mark.parametrize("x", [0.0, 0.25, 0.5, 1.0, 2.0])
def test_hardy_lhs_frozen_oracles(x):
    r = idn.hardy_lhs(x)
    assert r.converged
    assert abs(r.value - o.HARDY_LHS[x]) < 1e-10


@pytest.mark.parametrize("x", [0.0, 1.0, 2.0])
def test_hardy_identity_residual(x):
    l, r = idn.hardy_lhs(x), idn.hardy_rhs(x)
    assert abs(l.value - r.value) / (1.0 + abs(r.value)) <= 1e-8


def test_hardy_integrand_negligible_past_30():
    val = abs(sf.xi_upper(15.0)) / math.cosh(0.5 * math.pi * 30.0) / 901.0
    peak = o.XI_0  # integrand at 0 is xi(0)
    assert val < 1e-15 * peak


def test_hardy_domain():
    with pytest.raises(DomainError):
        idn.hardy_lhs(5.5)
    with pytest.raises(DomainError):
        idn.hardy_rhs(-0.1)


# --- koshliakov12 bridge -----------------------------------------------------

@pytest.mark.parametrize("x", [0.0, 0.25, 0.5, 1.0, 2.0])
def test_closed_form_bridge(x):
    """The closed-form constants must cancel exactly against the
    log-Gaussian moment: both right-hand-side forms agree to 1e-10."""
    lhs = idn.hardy_rhs(x, quad_tol=1e-12)
    base = idn.psibar0_gaussian(math.pi * math.exp(4.0 * x), quad_tol=1e-12)
    rhs = 0.5 * math.exp(x) * base.value
    assert abs(lhs.value - rhs) <= 1e-10


def test_bridge_constant_is_log_gaussian_moment():
    # the closed-form term equals -(1/2) e^x lgm(pi e^4x) identically
    for x in (0.0, 0.7, 2.0):
        closed = 0.25 * math.exp(-x) * (2.0 * x + 0.5 * o.EULER_GAMMA
                                        + 0.5 * math.log(math.pi) + math.log(2.0))
        via = -0.5 * math.exp(x) * sf.log_gaussian_moment(math.pi * math.exp(4.0 * x))
        assert abs(closed - via) < 1e-14


# --- genpsi ------------------------------------------------------------------

@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_genpsi_rhs_frozen_at_x0(m):
    r = idn.genpsi_rhs(m, 0.0)
    assert r.converged
    assert abs(r.value - o.GENPSI_RHS_X0[m]) < 1e-9


@pytest.mark.parametrize("m", [0, 1, 2, 3])
@pytest.mark.parametrize("x", [0.0, 0.5, 1.0])
def test_genpsi_identity(m, x):
    l, r = idn.genpsi_lhs(m, x), idn.genpsi_rhs(m, x)
    assert abs(l.value - r.value) / (1.0 + abs(r.value)) <= 1e-7


def test_genpsi_m0_equals_hardy_integral():
    # same integral, two module paths
    got = idn.genpsi_lhs(0, 0.0).value
    want = bounds.hardy_integral(math.pi).value
    assert abs(got - want) < 2e-10
    assert abs(got - o.I_PI) < 1e-9


def test_genpsi_m0_bridges_hardy_lhs():
    # substitution t -> 2t links the two xi kernels
    for x in (0.0, 0.25, 0.5, 1.0):
        lhs = idn.hardy_lhs(x).value
        rhs = 0.5 * idn.genpsi_rhs(0, x).value
        assert abs(lhs - rhs) <= 1e-9


def test_genpsi_rhs_m1_is_half_of_m0():
    # re(1/2 + it) = 1/2 makes the m=1 kernel half the m=0 kernel at x=0
    a = idn.genpsi_rhs(1, 0.0).value
    b = idn.genpsi_rhs(0, 0.0).value
    assert abs(a - 0.5 * b) < 1e-10


def test_genpsi_domain():
    with pytest.raises(DomainError):
        idn.genpsi_lhs(4, 0.0)
    with pytest.raises(DomainError):
        idn.genpsi_lhs(1, 2.0)


# --- kosh2 -------------------------------------------------------------------

@pytest.mark.parametrize("x", [0.0, 0.5, 1.0])
def test_kosh2_rhs_frozen(x):
    r = idn.kosh2_rhs(x)
    assert r.converged
    assert abs(r.value - o.KOSH2_RHS[x]) < 1e-9


def test_kosh2_rhs_positive_at_zero():
    assert idn.kosh2_rhs(0.0).value > 0.0


def test_kosh2_printed_bracket_grows_like_inverse_t():
    # (2 pi - 1) e^(x/2) / t asymptote near 0
    for x in (0.0, 1.0):
        for t in (1e-3, 1e-4, 1e-5):
            b = idn.kosh2_bracket(t, x, idn.PRINTED)
            want = (2.0 * math.pi - 1.0) * math.exp(0.5 * x) / t
            assert rel(b, want) < 0.2


def test_kosh2_printed_divergent_everywhere():
    for x in (0.0, 0.5, 1.0, 2.0, 3.0):
        assert idn.kosh2_divergent(x, idn.PRINTED)
        case = idn.verify("kosh2", {"x": x}, idn.PRINTED)
        assert case.verdict == idn.DIVERGENT


def test_kosh2_corrected_not_divergent():
    for x in (0.0, 1.0):
        assert not idn.kosh2_divergent(x, idn.KOSH2_CORRECTED)


@pytest.mark.parametrize("x", [0.0, 0.5, 1.0])
def test_kosh2_corrected_identity(x):
    """The rederived quarter-scaled bracket must reproduce the squared-xi
    side; the full-scale bracket (no 1/4) fails by a factor 4."""
    case = idn.verify("kosh2", {"x": x}, idn.KOSH2_CORRECTED)
    assert case.verdict == idn.PASS
    assert case.residual <= 1e-6
    # factor-4 sanity: scaling the corrected lhs by 4 breaks the identity
    assert abs(4.0 * case.lhs.value - case.rhs.value) > 1.0


def test_kosh2_corrected_carries_derivation_note():
    assert "Mellin" in idn.KOSH2_CORRECTED.note


def test_kosh2_domain():
    with pytest.raises(DomainError):
        idn.kosh2_rhs(3.5)


# --- cosine13 ----------------------------------------------------------------

def test_theta_bracket_both_forms_agree():
    for t in (0.2, 0.5, 0.50000001, 1.0, 3.0):
        direct = (math.exp(0.5 * t) - 2.0 * math.exp(-0.5 * t)
                  * o.brute_theta(math.exp(-2.0 * t)))
        assert abs(idn.theta_bracket(t) - direct) < 1e-12


def test_cosine13_printed_lhs_frozen():
    for b, want in o.COS13_PRINTED_LHS.items():
        got = idn.cosine13_lhs(complex(b, 0.0), idn.PRINTED)
        assert abs(got.value - want) < 1e-9


def test_cosine13_printed_rhs_frozen():
    for b, want in o.COS13_PRINTED_RHS.items():
        got = idn.cosine13_rhs(complex(b, 0.0))
        assert abs(got.value - want) < 1e-9
    got = idn.cosine13_rhs(0.3 + 0.2j)
    assert abs(got.value - o.COS13_PRINTED_RHS_COMPLEX) < 1e-8


def test_cosine13_rhs_at_zero_is_quarter_pi_hardy():
    got = idn.cosine13_rhs(0.0 + 0.0j)
    assert abs(got.value - 0.25 * math.pi * o.I_PI) < 1e-9


def test_cosine13_printed_identity_fails_with_shape_dependent_gap():
    """The printed kernel/prefactor pair disagrees by a beta-dependent
    ratio (not a constant), isolating the defect to the kernel shape."""
    ratios = []
    for b in (0.0, 0.25, 0.5):
        l = idn.cosine13_lhs(complex(b, 0.0), idn.PRINTED).value
        r = idn.cosine13_rhs(complex(b, 0.0)).value
        ratios.append(l / r)
    assert all(abs(q - 1.0) > 0.05 for q in ratios)
    assert max(ratios) - min(ratios) > 0.01  # beta-dependent, not constant


@pytest.mark.parametrize("b", [0.0 + 0.0j, 0.25 + 0.0j, 0.5 + 0.0j, -0.25 + 0.0j])
def test_cosine13_corrected_identity_real(b):
    case = idn.verify("cosine13", {"beta": b}, idn.COSINE13_CORRECTED)
    assert case.verdict == idn.PASS
    assert case.residual <= 1e-8
    assert abs(case.rhs.value - o.COS13_CORR_RHS[b.real]) < 1e-8


def test_cosine13_corrected_identity_complex():
    case = idn.verify("cosine13", {"beta": 0.3 + 0.2j}, idn.COSINE13_CORRECTED)
    assert case.verdict == idn.PASS
    assert case.residual <= 1e-7
    assert abs(case.rhs.value - o.COS13_CORR_RHS_COMPLEX) < 1e-8


def test_cosine13_even_in_beta():
    plus = idn.cosine13_lhs(0.25 + 0.0j, idn.COSINE13_CORRECTED).value
    minus = idn.cosine13_lhs(-0.25 + 0.0j, idn.COSINE13_CORRECTED).value
    assert abs(plus - minus) < 1e-10


def test_cosine13_strip_guards():
    with pytest.raises(DomainError):
        idn.cosine13_lhs(complex(0.0, 0.5 * math.pi - 0.05))
    with pytest.raises(DomainError):
        idn.cosine13_lhs(complex(3.5, 0.0))
    # inside the printed strip but past the Gaussian-convergence wedge
    with pytest.raises(DomainError):
        idn.cosine13_rhs(complex(0.0, 0.45))


# --- ximoment ----------------------------------------------------------------

@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_xi_moments_frozen(n):
    r = idn.xi_moment(n)
    assert r.converged
    assert rel(r.value, o.XI_MOMENTS[n]) < 1e-9


def test_xi_moment_sign_report():
    case = idn.verify("ximoment", {"n": 0})
    assert case.verdict == idn.PASS
    assert case.rhs is None and case.residual == 0.0
    assert "sign +" in case.note


# --- verify harness ----------------------------------------------------------

def test_verify_populates_case():
    case = idn.verify("hardy11", {"x": 0.0})
    assert case.name == "hardy11"
    assert case.verdict == idn.PASS
    assert case.residual <= 1e-8
    assert case.lhs.converged and case.rhs.converged


def test_verify_deterministic():
    a = idn.verify("genpsi", {"m": 1, "x": 0.5})
    b = idn.verify("genpsi", {"m": 1, "x": 0.5})
    assert a.lhs == b.lhs and a.rhs == b.rhs and a.residual == b.residual


def test_verify_unknown_name():
    with pytest.raises(DomainError):
        idn.verify("nope", {})


def test_default_cases_exact_grids():
    cases = idn.default_cases("hardy11")
    assert len(cases) == 5
    cases = idn.default_cases("kosh2")
    assert len(cases) == 6  # 3 x-values, both variants
    cases = idn.default_cases("all")
    assert len(cases) == 5 + 5 + 12 + 6 + 8 + 4


def test_variant_validation():
    with pytest.raises(DomainError):
        idn.VariantTag("fixed")
    with pytest.raises(DomainError):
        idn.VariantTag("corrected")  # a corrected form must cite a note
