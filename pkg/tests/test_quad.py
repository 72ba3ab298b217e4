import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relspec.models import OnePointModel, one_point_spectral_measure
from relspec.quad import (IntegrandError, NonConvergenceError, QuadratureSpec,
                          integrate_finite, integrate_to_infinity,
                          require_converged)
from relspec.specfun import cosine_integral

TIGHT = QuadratureSpec(abs_tol=1e-12, rel_tol=1e-11)


# ---------------------------------------------------------------------------
# finite interval
# ---------------------------------------------------------------------------

def test_finite_arctan():
    r = integrate_finite(lambda v: 1.0 / (1.0 + v * v), 0.0, 1.0, TIGHT)
    assert r.converged
    assert r.value == pytest.approx(math.pi / 4.0, abs=1e-12)


def test_finite_linear():
    r = integrate_finite(lambda v: v, 0.0, 1.0)
    assert r.converged
    assert r.value == pytest.approx(0.5, abs=1e-14)


def test_finite_oscillatory_segment():
    # frozen by the integration-by-parts oracle:
    # cos(2) - cos(20)/10 - 2 (Si(20) - Si(2))
    r = integrate_finite(lambda v: math.cos(2 * v) / (v * v), 1.0, 10.0,
                         TIGHT)
    assert r.converged
    assert r.value == pytest.approx(-0.34261249120997156878, abs=1e-11)


@pytest.mark.parametrize("k", range(0, 9))
def test_finite_monomials(k):
    r = integrate_finite(lambda v: v ** k, 0.0, 1.0)
    assert r.value == pytest.approx(1.0 / (k + 1), rel=1e-13)


def test_finite_requires_ordered_bounds():
    with pytest.raises(ValueError):
        integrate_finite(lambda v: v, 1.0, 0.0)


def test_integrand_error_carries_abscissa():
    def f(x):
        return math.nan if 0.4 < x < 0.6 else 1.0

    with pytest.raises(IntegrandError) as err:
        integrate_finite(f, 0.0, 1.0)
    assert 0.4 < err.value.abscissa < 0.6


def test_non_convergence_is_flagged_not_raised():
    spec = QuadratureSpec(abs_tol=1e-300, rel_tol=1e-300, max_subdivisions=40)
    r = integrate_finite(lambda v: math.exp(-v) * math.sin(7 * v), 0.0, 5.0,
                         spec)
    assert not r.converged
    assert math.isfinite(r.value)
    with pytest.raises(NonConvergenceError) as err:
        require_converged(r, "test piece")
    assert "test piece" in str(err.value)
    assert err.value.result is r


def test_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec(abs_tol=0.0)
    with pytest.raises(ValueError):
        QuadratureSpec(max_subdivisions=0)
    with pytest.raises(ValueError):
        QuadratureSpec(split_points=(2.0, 1.0))
    with pytest.raises(ValueError):
        QuadratureSpec(oscillation_period=-1.0)


def test_split_point_insensitivity():
    base = integrate_finite(lambda v: math.exp(-v), 0.0, 10.0, TIGHT)
    spec = QuadratureSpec(abs_tol=TIGHT.abs_tol, rel_tol=TIGHT.rel_tol,
                          split_points=(1.0, 2.0, 3.5, 7.0))
    split = integrate_finite(lambda v: math.exp(-v), 0.0, 10.0, spec)
    assert abs(base.value - split.value) < 10.0 * TIGHT.abs_tol


# ---------------------------------------------------------------------------
# semi-infinite interval
# ---------------------------------------------------------------------------

def test_gaussian_tail():
    r = integrate_to_infinity(lambda v: math.exp(-v * v), 0.0, TIGHT)
    assert r.converged
    assert r.value == pytest.approx(math.sqrt(math.pi) / 2.0, abs=1e-12)


def test_lorentzian_tail():
    r = integrate_to_infinity(lambda v: 1.0 / (1.0 + v * v), 0.0, TIGHT)
    assert r.converged
    assert r.value == pytest.approx(math.pi / 2.0, abs=1e-11)


def test_oscillatory_infinite_frozen_value():
    # integration-by-parts oracle: cos 2 - 2 (pi/2 - Si(2))
    spec = QuadratureSpec(abs_tol=1e-12, rel_tol=1e-11,
                          oscillation_period=math.pi)
    r = integrate_to_infinity(lambda v: math.cos(2 * v) / (v * v), 1.0, spec)
    assert r.converged
    assert r.value == pytest.approx(-0.34691353653154592831, abs=1e-10)


@pytest.mark.parametrize("a", (0.5, 1.0, 2.0))
def test_oscillatory_cosine_integral_identity(a):
    # int_1^inf cos(2av)/v dv = -Ci(2a)
    spec = QuadratureSpec(abs_tol=1e-12, rel_tol=1e-11,
                          oscillation_period=math.pi / a)
    r = integrate_to_infinity(lambda v: math.cos(2 * a * v) / v, 1.0, spec)
    assert r.converged
    assert r.value == pytest.approx(-cosine_integral(2 * a), abs=1e-9)


def test_additivity_spectral_measure():
    e = one_point_spectral_measure(OnePointModel(0.25))
    whole = integrate_to_infinity(e.eval, 0.0, TIGHT)
    head = integrate_finite(e.eval, 0.0, 1.0, TIGHT)
    tail = integrate_to_infinity(e.eval, 1.0, TIGHT)
    assert whole.converged and head.converged and tail.converged
    combined_err = (whole.error_estimate + head.error_estimate
                    + tail.error_estimate)
    assert abs(whole.value - (head.value + tail.value)) <= max(
        combined_err, 1e-12)


def test_split_points_carried_through_map():
    e = one_point_spectral_measure(OnePointModel(0.25))
    spec = QuadratureSpec(abs_tol=1e-12, rel_tol=1e-11,
                          split_points=(0.5, 2.0, 8.0))
    r = integrate_to_infinity(e.eval, 0.0, spec)
    assert r.converged
    assert r.value == pytest.approx(0.5, abs=1e-10)


def test_result_reports_evaluations():
    r = integrate_finite(lambda v: v * v, 0.0, 1.0)
    assert r.evaluations >= 15
    assert r.error_estimate >= 0.0


def test_converged_error_within_tolerance_contract():
    # converged implies error_estimate <= max(abs_tol, rel_tol |value|)
    e = one_point_spectral_measure(OnePointModel(0.25)).eval
    osc = QuadratureSpec(abs_tol=1e-10, rel_tol=1e-8,
                         oscillation_period=math.pi)
    cases = [
        (integrate_finite(e, 0.0, 1.0, TIGHT), TIGHT),
        (integrate_to_infinity(e, 0.0, TIGHT), TIGHT),
        (integrate_to_infinity(
            lambda v: math.exp(-v * v) * math.cos(2 * v), 0.0, osc), osc),
        (integrate_to_infinity(
            lambda v: math.cos(2 * v) / (v * v), 1.0, osc), osc),
    ]
    for r, spec in cases:
        assert r.converged
        assert r.error_estimate <= max(spec.abs_tol,
                                       spec.rel_tol * abs(r.value))


@settings(max_examples=40, deadline=None)
@given(st.floats(min_value=0.2, max_value=5.0),
       st.floats(min_value=0.1, max_value=4.0))
def test_exponential_scaling_property(rate, upper):
    r = integrate_finite(lambda v: math.exp(-rate * v), 0.0, upper, TIGHT)
    exact = (1.0 - math.exp(-rate * upper)) / rate
    assert r.value == pytest.approx(exact, rel=1e-10)
