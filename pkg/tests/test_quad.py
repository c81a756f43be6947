import math

import numpy as np
import pytest
import scipy.integrate
from hypothesis import given, settings
from hypothesis import strategies as st

from ads2dirac import quad
from ads2dirac.errors import ConvergenceError, ValidationError


def _flat_wave(omega):
    def phi(rho, u_plus, u_minus):
        c = np.cos(omega * rho) / math.sqrt(math.pi)
        s = -np.sin(omega * rho) / math.sqrt(math.pi)
        return np.stack([c, s], axis=-1).astype(complex)

    return phi


# ------------------------------------------------------------- spec object


def test_spec_validation():
    with pytest.raises(ValidationError):
        quad.QuadratureSpec(scheme="monte-carlo")
    with pytest.raises(ValidationError):
        quad.QuadratureSpec(inset=0.5)
    with pytest.raises(ValidationError):
        quad.QuadratureSpec(tolerance=0.0)
    with pytest.raises(ValidationError):
        quad.QuadratureSpec(max_levels=0)


def test_tolerance_resolution(monkeypatch):
    monkeypatch.delenv(quad.TOLERANCE_ENV, raising=False)
    assert quad.QuadratureSpec().resolved_tolerance() == quad.DEFAULT_TOLERANCE
    monkeypatch.setenv(quad.TOLERANCE_ENV, "1e-6")
    assert quad.QuadratureSpec().resolved_tolerance() == 1e-6
    assert quad.QuadratureSpec(tolerance=1e-9).resolved_tolerance() == 1e-9
    monkeypatch.setenv(quad.TOLERANCE_ENV, "zero")
    with pytest.raises(ValidationError):
        quad.QuadratureSpec().resolved_tolerance()
    monkeypatch.setenv(quad.TOLERANCE_ENV, "-1e-4")
    with pytest.raises(ValidationError):
        quad.QuadratureSpec().resolved_tolerance()


# ------------------------------------------------------------ basic values


def test_constant_integrand():
    result = quad.integrate(lambda rho, up, um: np.ones_like(rho))
    assert abs(result.value - math.pi) < 1e-12
    assert result.error_estimate <= quad.DEFAULT_TOLERANCE
    assert result.levels_used >= 2


def test_cosine_integrand():
    result = quad.integrate(lambda rho, up, um: np.cos(rho))
    assert abs(result.value - 2.0) < 1e-12


def test_smooth_oscillatory_against_adaptive():
    # bounded integrand with a mild endpoint zero of fractional order
    def f(rho, up, um):
        return (2.0 * np.sin(up) ** 2) ** 0.3 * np.cos(3.0 * rho)

    reference, err = scipy.integrate.quad(
        lambda r: (1.0 - math.sin(r)) ** 0.3 * math.cos(3.0 * r),
        -math.pi / 2,
        math.pi / 2,
        epsabs=1e-13,
        epsrel=1e-13,
        limit=200,
    )
    assert err < 1e-10
    result = quad.integrate(f)
    assert abs(result.value - reference) < 5e-11


def test_flat_spinor_unit_norm_any_frequency():
    for omega in (0.0, 0.7, 2.3):
        value = quad.inner_product(_flat_wave(omega), _flat_wave(omega))
        assert abs(value - 1.0) < 1e-11


def test_inner_product_conjugate_linearity():
    a = 0.8 - 0.6j
    phi = _flat_wave(0.9)

    def scaled(rho, up, um):
        return a * phi(rho, up, um)

    base = quad.inner_product(phi, phi)
    assert abs(quad.inner_product(scaled, phi) - np.conj(a) * base) < 1e-11
    assert abs(quad.inner_product(phi, scaled) - a * base) < 1e-11


@settings(max_examples=30, deadline=None)
@given(
    coeffs=st.lists(
        st.floats(-3.0, 3.0, allow_nan=False, allow_infinity=False),
        min_size=1,
        max_size=7,
    )
)
def test_polynomial_in_sin_rho_times_cos(coeffs):
    # substituting s = sin(rho) reduces the integral to an exact polynomial one
    poly = np.polynomial.Polynomial(coeffs)
    exact = poly.integ()(1.0) - poly.integ()(-1.0)

    def f(rho, up, um):
        return poly(np.sin(rho)) * np.cos(rho)

    result = quad.integrate(f)
    scale = 1.0 + float(np.sum(np.abs(coeffs)))
    assert abs(result.value - exact) < 1e-10 * scale


# -------------------------------------------------- singular but integrable


def _beta_closed_form(a, b):
    return (
        2.0 ** (a + b - 1.0)
        * math.gamma(a)
        * math.gamma(b)
        / math.gamma(a + b)
    )


def test_inverse_quarter_power_closed_form():
    # int (1-sin rho)^(-1/4) d rho = 2^(-1/4) B(1/4, 1/2)
    expected = _beta_closed_form(0.25, 0.5)

    def f(rho, up, um):
        return (2.0 * np.sin(up) ** 2) ** -0.25

    result = quad.integrate(f)
    assert abs(result.value - expected) < 1e-10


def test_singular_spinor_inner_product():
    expected = _beta_closed_form(0.25, 0.5)

    def phi(rho, up, um):
        first = (2.0 * np.sin(up) ** 2) ** -0.125
        return np.stack([first, np.zeros_like(rho)], axis=-1).astype(complex)

    assert abs(quad.inner_product(phi, phi) - expected) < 1e-10


def test_both_wall_singularities():
    # (cos rho)^(-1/2) = (2 sin u+ sin u-)^(-1/2), integrable at both walls
    expected = _beta_closed_form(0.25, 0.25)

    def f(rho, up, um):
        return (2.0 * np.sin(up) * np.sin(um)) ** -0.5

    result = quad.integrate(f)
    assert abs(result.value - expected) < 1e-10


def test_halved_inset_changes_less_than_estimate():
    def f(rho, up, um):
        return (2.0 * np.sin(up) ** 2) ** -0.25

    base = quad.integrate(f, quad.QuadratureSpec(inset=1e-150))
    finer = quad.integrate(f, quad.QuadratureSpec(inset=0.5e-150))
    assert abs(base.value - finer.value) <= base.error_estimate + 1e-30


# ------------------------------------------------------is-------- divergence


@pytest.mark.filterwarnings("ignore:overflow")
@pytest.mark.parametrize("power", [-0.5, -1.0, -2.0])
def test_nonintegrable_powers_raise(power):
    def f(rho, up, um):
        return (2.0 * np.sin(up) ** 2) ** power

    with pytest.raises(ConvergenceError, match="diverge"):
        quad.integrate(f)


def test_divergent_inner_product_raises():
    def phi(rho, up, um):
        first = (2.0 * np.sin(up) ** 2) ** -0.5
        return np.stack([first, np.zeros_like(rho)], axis=-1).astype(complex)

    with pytest.raises(ConvergenceError):
        quad.inner_product(phi, phi)


# ------------------------------------------------------------ Gauss scheme


def test_gauss_legendre_bounded_integrands():
    spec = quad.QuadratureSpec(scheme="gauss-legendre")
    result = quad.integrate(lambda rho, up, um: np.cos(rho) ** 2, spec)
    assert abs(result.value - math.pi / 2) < 1e-11

    def f(rho, up, um):
        return (2.0 * np.sin(up) ** 2) ** 0.3 * np.cos(3.0 * rho)

    de_value = quad.integrate(f).value
    gl_value = quad.integrate(f, spec).value
    assert abs(de_value - gl_value) < 5e-11


# ------------------------------------------------------------ exponent fits

_EPS_GRID = np.geomspace(1e-7, 1e-3, 17)


def test_exponent_fit_positive_power():
    def phi(rho, up, um):
        first = (2.0 * np.sin(up) ** 2) ** 0.125
        second = (2.0 * np.sin(up) ** 2) ** 0.625
        return np.stack([first, second], axis=-1).astype(complex)

    fit = quad.endpoint_exponent_fit(phi, "+", _EPS_GRID)
    assert abs(fit.exponent - 0.5) < 0.01
    assert not fit.log_factor


def test_exponent_fit_negative_power():
    def phi(rho, up, um):
        first = (2.0 * np.sin(up) ** 2) ** -0.125
        return np.stack([first, np.zeros_like(rho)], axis=-1).astype(complex)

    fit = quad.endpoint_exponent_fit(phi, "+", _EPS_GRID)
    assert abs(fit.exponent + 0.5) < 0.01
    assert not fit.log_factor


def test_exponent_fit_bounded_components():
    fit = quad.endpoint_exponent_fit(_flat_wave(1.3), "+", _EPS_GRID)
    assert abs(fit.exponent) < 0.01
    assert not fit.log_factor


def test_exponent_fit_left_endpoint():
    def phi(rho, up, um):
        first = (2.0 * np.sin(um) ** 2) ** -0.125
        return np.stack([first, np.zeros_like(rho)], axis=-1).astype(complex)

    fit = quad.endpoint_exponent_fit(phi, "-", _EPS_GRID)
    assert abs(fit.exponent + 0.5) < 0.01


def test_exponent_fit_log_factor():
    # base is eps^2/2, so these are eps^(1/2) log(eps)-like and eps^(-1/2)
    def phi(rho, up, um):
        base = 2.0 * np.sin(up) ** 2
        first = base**0.125 * np.log(base)
        second = base**-0.125
        return np.stack([first, second], axis=-1).astype(complex)

    fit = quad.endpoint_exponent_fit(phi, "+", _EPS_GRID)
    assert abs(fit.exponent + 0.5) < 0.02
    assert fit.log_factor


def test_exponent_fit_validation():
    phi = _flat_wave(1.0)
    with pytest.raises(ValidationError):
        quad.endpoint_exponent_fit(phi, "up", _EPS_GRID)
    with pytest.raises(ValidationError):
        quad.endpoint_exponent_fit(phi, "+", np.geomspace(1e-9, 1e-3, 9))
    with pytest.raises(ValidationError):
        quad.endpoint_exponent_fit(phi, "+", np.linspace(1e-6, 1e-3, 9))
    with pytest.raises(ValidationError):
        quad.endpoint_exponent_fit(phi, "+", _EPS_GRID[:3])


def test_exponent_fit_underflow_signal():
    def phi(rho, up, um):
        return np.zeros(rho.shape + (2,), dtype=complex)

    with pytest.raises(ConvergenceError):
        quad.endpoint_exponent_fit(phi, "+", _EPS_GRID)
