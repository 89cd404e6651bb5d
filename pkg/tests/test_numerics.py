import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fermiparity.numerics import (
    GAUSS_WEIGHTS,
    KRONROD_NODES,
    KRONROD_WEIGHTS,
    QuadratureError,
    _GAUSS_IDX,
    fermi_moment,
    fermi_occupation,
    integrate_semi_infinite,
    moment_table,
    tail_cutoff,
)

# 30-digit reference values of ∫ q^k/(e^q+1) dq from an arbitrary-precision oracle
MOMENT_ORACLE = {
    2: 1.80308535473939142809960724227,
    3: 5.68219697698347550545901940684,
    4: 23.3308744907258233424557234453,
}


def _rule(nodes, weights, degree):
    return float(np.sum(weights * nodes**degree))


@pytest.mark.parametrize("degree", range(0, 23))
def test_kronrod_rule_exact_through_degree_22(degree):
    exact = 0.0 if degree % 2 else 2.0 / (degree + 1)
    assert _rule(KRONROD_NODES, KRONROD_WEIGHTS, degree) == pytest.approx(exact, abs=1e-14)


@pytest.mark.parametrize("degree", range(0, 14))
def test_embedded_gauss_rule_exact_through_degree_13(degree):
    exact = 0.0 if degree % 2 else 2.0 / (degree + 1)
    nodes = KRONROD_NODES[_GAUSS_IDX]
    assert _rule(nodes, GAUSS_WEIGHTS, degree) == pytest.approx(exact, abs=1e-14)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_closed_form_moments_match_oracle(k):
    assert fermi_moment(k) == pytest.approx(MOMENT_ORACLE[k], rel=1e-14)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_quadrature_moments_match_oracle(k):
    res = integrate_semi_infinite(lambda q: q**k * fermi_occupation(q), 1e-12)
    assert res.converged
    assert abs(res.value - MOMENT_ORACLE[k]) <= 1e-10
    assert res.abs_error_estimate <= 1e-12


def test_cubic_moment_is_seven_pi4_over_120():
    assert fermi_moment(3) == pytest.approx(7 * math.pi**4 / 120, rel=1e-15)


def test_moment_rejects_unsupported_order():
    with pytest.raises(ValueError):
        fermi_moment(5)


def test_moment_table_contents():
    table = moment_table()
    assert set(table.moment_k) == {2, 3, 4}
    assert table.zeta3 == pytest.approx(1.2020569031595942, rel=1e-15)


def test_occupation_no_overflow_at_extremes():
    vals = fermi_occupation(np.array([-1e4, 0.0, 1e4]))
    np.testing.assert_allclose(vals, [1.0, 0.5, 0.0], atol=0)


def test_tail_cutoff_bounds_the_tail():
    q = tail_cutoff(1e-12)
    assert 40 < q < 50
    # q^4 e^{-q} tail integral at the cutoff is below tol / 10
    tail = integrate_semi_infinite(lambda x: (x + q) ** 4 * np.exp(-(x + q)), 1e-16).value
    assert tail <= 1e-13


def test_exponential_integral_exact():
    res = integrate_semi_infinite(lambda q: np.exp(-q), 1e-12)
    assert abs(res.value - 1.0) <= 1e-11


def test_vector_valued_integrand():
    res = integrate_semi_infinite(
        lambda q: np.stack([np.exp(-q), q * np.exp(-q), q**2 * np.exp(-q)], axis=-1), 1e-12
    )
    np.testing.assert_allclose(res.value, [1.0, 1.0, 2.0], atol=1e-10)


def test_nan_integrand_raises_with_abscissa():
    def bad(q):
        out = np.exp(-q)
        out[q > 3.0] = np.nan
        return out

    with pytest.raises(QuadratureError, match=r"not finite at q = \d"):
        integrate_semi_infinite(bad, 1e-10)


def test_budget_exhaustion_flags_non_convergence():
    res = integrate_semi_infinite(lambda q: np.sqrt(q) * np.exp(-q), 1e-15, budget=45)
    assert not res.converged
    assert res.evaluations <= 45
    with pytest.raises(QuadratureError):
        integrate_semi_infinite(lambda q: np.sqrt(q) * np.exp(-q), 1e-15, budget=45, raise_on_failure=True)


def test_invalid_arguments():
    with pytest.raises(ValueError):
        integrate_semi_infinite(np.exp, 0.0)
    with pytest.raises(ValueError):
        integrate_semi_infinite(np.exp, 1e-8, budget=3)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=15, max_value=3000), st.integers(min_value=15, max_value=3000))
def test_error_estimate_monotone_in_budget(b1, b2):
    lo, hi = sorted((b1, b2))
    f = lambda q: np.sqrt(q) * q**2 * fermi_occupation(q)  # noqa: E731
    r_lo = integrate_semi_infinite(f, 1e-14, budget=lo)
    r_hi = integrate_semi_infinite(f, 1e-14, budget=hi)
    assert r_hi.abs_error_estimate <= r_lo.abs_error_estimate


@settings(max_examples=30, deadline=None)
@given(
    st.floats(min_value=-5, max_value=5, allow_nan=False),
    st.floats(min_value=-5, max_value=5, allow_nan=False),
    st.integers(min_value=2, max_value=4),
)
def test_linearity(a, b, k):
    f = lambda q: q**k * fermi_occupation(q)  # noqa: E731
    g = lambda q: np.exp(-q)  # noqa: E731
    combined = integrate_semi_infinite(lambda q: a * f(q) + b * g(q), 1e-11).value
    assert combined == pytest.approx(a * fermi_moment(k) + b, abs=1e-9)


@settings(max_examples=30, deadline=None)
@given(st.floats(min_value=0.2, max_value=20.0))
def test_scaled_exponential(lam):
    res = integrate_semi_infinite(lambda q: np.exp(-lam * q), 1e-12, upper=60.0 / lam)
    assert res.value == pytest.approx(1.0 / lam, abs=1e-10)
