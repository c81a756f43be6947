"""Ladder action on mode families and classification of their frequency sets.

The isometry algebra acts on frequency eigenmodes through the pair of
raising/lowering maps

    L_pm [Phi e^{-i omega t}]
        = pm i [cos(rho) d/drho - (1/2 pm omega) sin(rho)
                mp i cos(rho) Sigma01] Phi e^{-i (omega pm 1) t},

so each map sends a mode to a multiple of the neighboring mode of the
same family.  This module evaluates that action analytically (the
polynomial structures differentiate through the Jacobi parameter-shift
identity), projects onto the expected neighbor, and assembles the
evidence needed to classify a family's mode set: ladder coefficients,
chain terminations, and the quadratic Casimir.

Classification is evidence based.  A family is declared a
lowest/highest-weight pair only when the lowering map annihilates the
bottom positive mode and the raising map annihilates the top negative
mode within tolerance, and the measured Casimir fixes the weight.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple, Union

import numpy as np

from . import algebra, modes, quad, specfun
from .errors import ValidationError

__all__ = [
    "DISCRETE_PLUS", "DISCRETE_MINUS", "MOCK_PLUS", "MOCK_MINUS",
    "PRINCIPAL", "COMPLEMENTARY", "SERIES",
    "UIRLabel", "LadderAction", "LadderCoefficients",
    "mode_derivative", "negative_edge", "apply_ladder",
    "ladder_coefficients",
    "casimir_check", "classify", "invariant_frequency_splitting",
    "chiral_partner_residual",
]

DISCRETE_PLUS = "DiscretePlus"
DISCRETE_MINUS = "DiscreteMinus"
MOCK_PLUS = "MockDiscretePlus"
MOCK_MINUS = "MockDiscreteMinus"
PRINCIPAL = "PrincipalS0"
COMPLEMENTARY = "Complementary"
SERIES = frozenset({DISCRETE_PLUS, DISCRETE_MINUS, MOCK_PLUS, MOCK_MINUS,
                    PRINCIPAL, COMPLEMENTARY})

_ANNIHILATION_TOL = 1e-8
_RESIDUAL_TOL = 1e-8
_CASIMIR_TOL = 1e-9
_WEIGHT_TOL = 1e-12

# high-index projections need deeper refinement before the level-to-level
# difference drops below the default tolerance
_DEFAULT_SPEC = quad.QuadratureSpec(max_levels=6)


def _quad_spec(spec):
    return _DEFAULT_SPEC if spec is None else spec

_MIRROR = frozenset({modes.DIRICHLET_I, modes.DIRICHLET_II,
                     modes.HALF_INTEGER_V, modes.HALF_MASS_VI})
_INTEGER = frozenset({modes.DIRICHLET_III, modes.DIRICHLET_IV})


@dataclass(frozen=True)
class UIRLabel:
    """Label of an irreducible unitary summand.

    ``weight`` is the lowest (discrete/mock) or reference (weight 1/2
    for the continuous series) L0 eigenvalue; the Casimir is always
    weight*(weight-1).  ``mu`` records the frequency offset modulo 1,
    reduced to (-1/2, 1/2], for the series that carry one.
    """

    series: str
    weight: float
    mu: Optional[float] = None

    def __post_init__(self):
        if self.series not in SERIES:
            raise ValidationError(f"unknown series {self.series!r}")
        w = float(self.weight)
        object.__setattr__(self, "weight", w)
        mu = None if self.mu is None else float(self.mu)
        if self.series in (DISCRETE_PLUS, DISCRETE_MINUS):
            if not w > 0.0:
                raise ValidationError(
                    f"discrete series needs a positive weight, got {w}")
            if mu is not None:
                raise ValidationError(
                    "discrete series carries no frequency offset label")
        elif self.series in (MOCK_PLUS, MOCK_MINUS):
            if abs(w - 0.5) > _WEIGHT_TOL:
                raise ValidationError(
                    f"mock discrete series sits at weight 1/2, got {w}")
            if mu is None:
                mu = 0.5
            elif abs(mu - 0.5) > _WEIGHT_TOL:
                raise ValidationError(
                    f"mock discrete series has mu = 1/2, got {mu}")
        elif self.series == COMPLEMENTARY:
            if not (0.0 < w < 1.0 and abs(w - 0.5) > _WEIGHT_TOL):
                raise ValidationError(
                    "complementary series needs -1/4 < Casimir < 0, "
                    f"i.e. weight in (0,1) away from 1/2; got {w}")
            if mu is None:
                mu = 0.0
            elif abs(mu) > _WEIGHT_TOL:
                raise ValidationError(
                    f"complementary summands here carry mu = 0, got {mu}")
        else:
            if abs(w - 0.5) > _WEIGHT_TOL:
                raise ValidationError(
                    f"principal series sits at weight 1/2, got {w}")
            if mu is None:
                raise ValidationError("principal series needs mu")
            if not -0.5 < mu <= 0.5 + _WEIGHT_TOL:
                raise ValidationError(f"mu must lie in (-1/2, 1/2], got {mu}")
        object.__setattr__(self, "mu", mu)

    @property
    def casimir(self) -> float:
        return self.weight * (self.weight - 1.0)


@dataclass(frozen=True)
class LadderAction:
    """Resolved action of one raising/lowering map on a single mode.

    ``target_index`` is the integer index of the image mode, or None
    when the image is the conjugate edge partner (reachable through
    :func:`negative_edge`).  An annihilated mode reports both targets
    as None with coefficient 0; ``image_norm`` is then the measured
    norm of the image, which must sit below the annihilation tolerance.
    """

    sign: int
    source_omega: float
    target_omega: Optional[float]
    target_index: Optional[int]
    coefficient: complex
    image_norm: float
    residual: float


@dataclass(frozen=True)
class LadderCoefficients:
    """The pair of ladder coefficients attached to one mode index."""

    family: str
    M: float
    n: int
    c_plus: complex
    c_minus: complex


# ---------------------------------------------------------------------------
# Analytic derivatives of the normalized structures
#
# d/dx P_n^{(a,b)}(x) = (n+a+b+1)/2 * P_{n-1}^{(a+1,b+1)}(x), together
# with ds/drho = cos(rho), d(cos rho)/drho = -sin(rho) written in the
# cancellation-free endpoint variables.


def _jac(n, a, b, x):
    if n < 0:
        return np.zeros_like(x)
    return specfun.jacobi_p_values(n, a, b, np.ascontiguousarray(x))


def _type1_derivative(M, m, sgn):
    a, b = M - 0.5, M + 0.5

    def deriv(rho, up, um):
        sp, sm = np.sin(up), np.sin(um)
        s = (sm - sp) * (sm + sp)
        cr = 2.0 * sp * sm
        wgt = cr ** M
        dw = -M * s * cr ** (M - 1.0)
        P = _jac(m, a, b, s)
        Q = _jac(m, b, a, s)
        fac = 0.5 * (m + 2.0 * M + 1.0)
        dP = fac * _jac(m - 1, a + 1.0, b + 1.0, s)
        dQ = fac * _jac(m - 1, b + 1.0, a + 1.0, s)
        out = np.empty(up.shape + (2,), dtype=np.complex128)
        r2 = math.sqrt(2.0)
        out[..., 0] = r2 * (dw * sm * P + wgt * 0.5 * sp * P
                            + wgt * sm * cr * dP)
        out[..., 1] = sgn * r2 * (dw * sp * Q - wgt * 0.5 * sm * Q
                                  + wgt * sp * cr * dQ)
        return out

    return deriv


def _type2_derivative(M, m, sgn):
    a, b = 0.5 - M, -0.5 - M

    def deriv(rho, up, um):
        sp, sm = np.sin(up), np.sin(um)
        s = (sm - sp) * (sm + sp)
        cr = 2.0 * sp * sm
        wgt = cr ** (-M)
        dw = M * s * cr ** (-M - 1.0)
        P = _jac(m, a, b, s)
        Q = _jac(m, b, a, s)
        fac = 0.5 * (m + 1.0 - 2.0 * M)
        dP = fac * _jac(m - 1, a + 1.0, b + 1.0, s)
        dQ = fac * _jac(m - 1, b + 1.0, a + 1.0, s)
        out = np.empty(up.shape + (2,), dtype=np.complex128)
        r2 = math.sqrt(2.0)
        out[..., 0] = r2 * (dw * sp * P - wgt * 0.5 * sm * P
                            + wgt * sp * cr * dP)
        out[..., 1] = -sgn * r2 * (dw * sm * Q + wgt * 0.5 * sp * Q
                                   + wgt * sm * cr * dQ)
        return out

    return deriv


def _type3_derivative(M, m, sgn):
    def deriv(rho, up, um):
        sp, sm = np.sin(up), np.sin(um)
        s = (sm - sp) * (sm + sp)
        cr = 2.0 * sp * sm
        wgt = (sp / sm) ** (-M)
        out = np.empty(up.shape + (2,), dtype=np.complex128)
        if m == 0:
            out[..., 0] = 0.0
        else:
            P = _jac(m - 1, 0.5 - M, 0.5 + M, s)
            dP = 0.5 * (m + 1.0) * _jac(m - 2, 1.5 - M, 1.5 + M, s)
            out[..., 0] = wgt * ((M - s) * P + cr * cr * dP)
        Q = _jac(m, -0.5 - M, -0.5 + M, s)
        dQ = 0.5 * m * _jac(m - 1, 0.5 - M, 0.5 + M, s)
        out[..., 1] = -sgn * 2.0 * wgt * (M / cr * Q + cr * dQ)
        return out

    return deriv


def _type4_derivative(M, m, sgn):
    def deriv(rho, up, um):
        sp, sm = np.sin(up), np.sin(um)
        s = (sm - sp) * (sm + sp)
        cr = 2.0 * sp * sm
        wgt = (sp / sm) ** M
        out = np.empty(up.shape + (2,), dtype=np.complex128)
        P = _jac(m, -0.5 + M, -0.5 - M, s)
        dP = 0.5 * m * _jac(m - 1, 0.5 + M, 0.5 - M, s)
        out[..., 0] = 2.0 * wgt * (-M / cr * P + cr * dP)
        if m == 0:
            out[..., 1] = 0.0
        else:
            Q = _jac(m - 1, 0.5 + M, 0.5 - M, s)
            dQ = 0.5 * (m + 1.0) * _jac(m - 2, 1.5 + M, 1.5 - M, s)
            out[..., 1] = sgn * wgt * ((-M - s) * Q + cr * cr * dQ)
        return out

    return deriv


def _beta_derivative(omega, shift, odd):
    def deriv(rho, up, um):
        arg = omega * rho - shift
        out = np.empty(rho.shape + (2,), dtype=np.complex128)
        if odd:
            out[..., 0] = omega * np.cos(arg)
            out[..., 1] = -omega * np.sin(arg)
        else:
            out[..., 0] = -omega * np.sin(arg)
            out[..., 1] = -omega * np.cos(arg)
        return out

    return deriv


_DERIVATIVES = {
    modes.DIRICHLET_I: _type1_derivative,
    modes.DIRICHLET_II: _type2_derivative,
    modes.DIRICHLET_III: _type3_derivative,
    modes.DIRICHLET_IV: _type4_derivative,
    modes.HALF_INTEGER_V: _type1_derivative,
    modes.HALF_MASS_VI: _type1_derivative,
}


def _is_edge(mode_obj) -> bool:
    return (mode_obj.family in _MIRROR and mode_obj.n == 0
            and mode_obj.omega < 0.0)


def mode_derivative(mode_obj) -> Callable:
    """d/drho of the normalized spatial mode, as a grid evaluator.

    Exact Jacobi parameter-shift differentiation; no finite
    differences.  Accepts the conjugate edge partner produced by
    :func:`negative_edge`.
    """
    if mode_obj.family == modes.MASSLESS_BETA:
        shift = 0.5 * (mode_obj.beta_plus - mode_obj.beta_minus)
        raw = _beta_derivative(mode_obj.omega, shift, mode_obj.n % 2 == 1)
    elif _is_edge(mode_obj):
        base = _DERIVATIVES[mode_obj.family](mode_obj.M, 0, 1)

        def raw(rho, up, um, _base=base):
            return algebra.charge_conjugate(_base(rho, up, um))
    else:
        sgn = 1 if mode_obj.n >= 0 else -1
        raw = _DERIVATIVES[mode_obj.family](mode_obj.M, abs(mode_obj.n), sgn)
    norm = mode_obj.normalization

    def deriv(rho, up, um):
        return norm * raw(rho, up, um)

    return deriv


def negative_edge(family, M, spec=None):
    """The charge-conjugate partner of the bottom mode of a mirror family.

    The mirror families index only one mode at each omega = +-(lowest
    frequency); the partner at negative frequency is the charge
    conjugate of mode 0 and is returned here as a mode object with
    omega flipped (still carrying n = 0).
    """
    if family not in _MIRROR:
        raise ValidationError(
            f"family {family!r} indexes its negative modes directly")
    base = modes.mode(family, M, 0, spec=_quad_spec(spec))
    base_structure = base._structure

    def structure(rho, up, um):
        return algebra.charge_conjugate(base_structure(rho, up, um))

    return dataclasses.replace(base, omega=-base.omega,
                               _structure=structure)


# ---------------------------------------------------------------------------
# Ladder action


def _ladder_integrand(sign, omega, value_fn, deriv_fn):
    def image(rho, up, um):
        sp, sm = np.sin(up), np.sin(um)
        s = (sm - sp) * (sm + sp)
        cr = 2.0 * sp * sm
        v = value_fn(rho, up, um)
        d = deriv_fn(rho, up, um)
        out = np.empty_like(v)
        pref = 0.5 + sign * omega
        out[..., 0] = (cr * d[..., 0] - pref * s * v[..., 0]
                       + sign * 0.5 * cr * v[..., 1])
        out[..., 1] = (cr * d[..., 1] - pref * s * v[..., 1]
                       - sign * 0.5 * cr * v[..., 0])
        return (1j * sign) * out

    return image


def _norm(fn, spec) -> float:
    val = complex(quad.inner_product(fn, fn, spec=spec))
    return math.sqrt(max(val.real, 0.0))


def _target_of(mode_obj, sign, spec):
    """The neighbor mode hit by L_sign, or (None, None) at a chain end."""
    fam = mode_obj.family
    if fam == modes.MASSLESS_BETA:
        idx = mode_obj.n + sign
        return modes.mode(fam, 0.0, idx, beta_plus=mode_obj.beta_plus,
                          beta_minus=mode_obj.beta_minus, spec=spec), idx
    if fam in _INTEGER:
        idx = mode_obj.n + sign
        return modes.mode(fam, mode_obj.M, idx, spec=spec), idx
    # mirror families: positive tower n >= 0, negative tower n <= -1,
    # plus the conjugate edge (n = 0, omega < 0)
    if _is_edge(mode_obj):
        if sign > 0:
            return None, None
        return modes.mode(fam, mode_obj.M, -1, spec=spec), -1
    n = mode_obj.n
    if n >= 0:
        if sign > 0:
            return modes.mode(fam, mode_obj.M, n + 1, spec=spec), n + 1
        if n == 0:
            return None, None
        return modes.mode(fam, mode_obj.M, n - 1, spec=spec), n - 1
    if sign < 0:
        return modes.mode(fam, mode_obj.M, n - 1, spec=spec), n - 1
    if n == -1:
        return negative_edge(fam, mode_obj.M, spec=spec), None
    return modes.mode(fam, mode_obj.M, n + 1, spec=spec), n + 1


def apply_ladder(sign, mode_obj, spec=None) -> LadderAction:
    """Apply L_{+1} or L_{-1} to a normalized mode and resolve the image.

    The image is projected on the unique neighboring mode of the same
    family; the leftover after removing that component must vanish
    within tolerance, otherwise the mode set would not be closed under
    the algebra and a ValidationError is raised.  At a chain end the
    whole image must vanish within the annihilation tolerance.
    """
    sign = int(sign)
    if sign not in (-1, 1):
        raise ValidationError(f"ladder sign must be +-1, got {sign}")
    spec = _quad_spec(spec)
    image = _ladder_integrand(sign, mode_obj.omega, mode_obj.spatial,
                              mode_derivative(mode_obj))
    target, idx = _target_of(mode_obj, sign, spec)
    if target is None:
        nrm = _norm(image, spec)
        if nrm > _ANNIHILATION_TOL:
            raise ValidationError(
                f"expected annihilation at omega={mode_obj.omega}, "
                f"but the ladder image has norm {nrm:.3e}")
        return LadderAction(sign=sign, source_omega=mode_obj.omega,
                            target_omega=None, target_index=None,
                            coefficient=0j, image_norm=nrm, residual=nrm)
    coeff = complex(quad.inner_product(target.spatial, image, spec=spec))

    def leftover(rho, up, um):
        return image(rho, up, um) - coeff * target.spatial(rho, up, um)

    residual = _norm(leftover, spec)
    if residual > _RESIDUAL_TOL:
        raise ValidationError(
            f"ladder image at omega={mode_obj.omega} not resolved by the "
            f"neighbor at omega={target.omega}: residual {residual:.3e}")
    image_norm = math.hypot(abs(coeff), residual)
    return LadderAction(sign=sign, source_omega=mode_obj.omega,
                        target_omega=target.omega, target_index=idx,
                        coefficient=coeff, image_norm=image_norm,
                        residual=residual)


def ladder_coefficients(family, M, n, beta_plus=None, beta_minus=None,
                        spec=None) -> LadderCoefficients:
    """Both ladder coefficients of the mode at index n."""
    spec = _quad_spec(spec)
    mo = modes.mode(family, M, n, beta_plus=beta_plus,
                    beta_minus=beta_minus, spec=spec)
    up = apply_ladder(+1, mo, spec=spec)
    dn = apply_ladder(-1, mo, spec=spec)
    return LadderCoefficients(family=family, M=mo.M, n=int(n),
                              c_plus=up.coefficient, c_minus=dn.coefficient)


# ---------------------------------------------------------------------------
# Casimir and classification


def _coefficient_table(family, M, window, beta_plus=None, beta_minus=None,
                       spec=None):
    table = {}
    for n in window:
        table[n] = ladder_coefficients(family, M, n, beta_plus=beta_plus,
                                       beta_minus=beta_minus, spec=spec)
    return table


def _casimir_values(family, M, beta_plus=None, beta_minus=None, spec=None):
    spec = _quad_spec(spec)
    if family in _MIRROR:
        window = range(0, 10)
        inner = range(0, 9)
    else:
        window = range(-5, 6)
        inner = range(-4, 5)
    table = _coefficient_table(family, M, window, beta_plus=beta_plus,
                               beta_minus=beta_minus, spec=spec)
    omegas = {}
    for n in window:
        omegas[n] = modes.mode(family, M, n, beta_plus=beta_plus,
                               beta_minus=beta_minus, spec=spec).omega
    values = []
    for n in inner:
        down = table[n - 1].c_plus * table[n].c_minus if n - 1 in table else 0j
        up = table[n + 1].c_minus * table[n].c_plus
        values.append(omegas[n] ** 2 + 0.5 * (down + up))
    return values


def casimir_check(family, M, beta_plus=None, beta_minus=None,
                  spec=None) -> float:
    """Measure the quadratic Casimir omega^2 + (c+ c- symmetrized)/2.

    Scans a window of mode indices and requires the value to be real
    and constant across the window to 1e-9; returns the constant.
    """
    values = _casimir_values(family, M, beta_plus=beta_plus,
                             beta_minus=beta_minus, spec=spec)
    reals = [v.real for v in values]
    drift = max(reals) - min(reals)
    imag = max(abs(v.imag) for v in values)
    if drift > _CASIMIR_TOL or imag > _CASIMIR_TOL:
        raise ValidationError(
            f"Casimir not constant over the scan window: drift {drift:.3e}, "
            f"imaginary part {imag:.3e}")
    return math.fsum(reals) / len(reals)


def _pair_labels(weight) -> Tuple[UIRLabel, UIRLabel]:
    if abs(weight - 0.5) <= 1e-9:
        return (UIRLabel(MOCK_PLUS, 0.5, 0.5), UIRLabel(MOCK_MINUS, 0.5, 0.5))
    return (UIRLabel(DISCRETE_PLUS, weight), UIRLabel(DISCRETE_MINUS, weight))


def _reduced_mu(omega0: float) -> float:
    r = omega0 % 1.0
    if r > 0.5 + 1e-12:
        r -= 1.0
    return r


def _classify_mirror(family, M, spec):
    bottom = modes.mode(family, M, 0, spec=spec)
    down = apply_ladder(-1, bottom, spec=spec)
    up = apply_ladder(+1, negative_edge(family, M, spec=spec), spec=spec)
    if (down.image_norm > _ANNIHILATION_TOL
            or up.image_norm > _ANNIHILATION_TOL):
        raise ValidationError(
            f"family {family} did not terminate its ladder chains: "
            f"norms {down.image_norm:.3e}, {up.image_norm:.3e}")
    weight = bottom.omega
    q = casimir_check(family, M, spec=spec)
    if abs(q - weight * (weight - 1.0)) > 1e-8:
        raise ValidationError(
            f"Casimir {q} inconsistent with weight {weight}")
    return _pair_labels(weight)


def _classify_integer(family, M, spec):
    zero = modes.mode(family, M, 0, spec=spec)
    down = apply_ladder(-1, zero, spec=spec)
    up = apply_ladder(+1, zero, spec=spec)
    if (down.image_norm <= _ANNIHILATION_TOL
            or up.image_norm <= _ANNIHILATION_TOL):
        raise ValidationError(
            f"family {family} unexpectedly terminated at its zero mode")
    q = casimir_check(family, M, spec=spec)
    if q <= -0.25 + _CASIMIR_TOL:
        return UIRLabel(PRINCIPAL, 0.5, 0.0)
    if q >= 0.0:
        raise ValidationError(f"Casimir {q} outside the continuous range")
    return UIRLabel(COMPLEMENTARY, 0.5 + math.sqrt(q + 0.25), 0.0)


def _classify_beta(beta_plus, beta_minus, spec):
    probe = modes.mode(modes.MASSLESS_BETA, 0.0, 0, beta_plus=beta_plus,
                       beta_minus=beta_minus, spec=spec)
    beta = 1.0 - probe.omega
    q = casimir_check(modes.MASSLESS_BETA, 0.0, beta_plus=beta_plus,
                      beta_minus=beta_minus, spec=spec)
    if abs(q + 0.25) > 1e-8:
        raise ValidationError(f"massless Casimir {q} is not -1/4")
    nearest = round(beta - 1.0)
    if abs(nearest + 1.0 - beta) <= 1e-12:
        # a zero frequency sits in the set: single continuous summand
        return UIRLabel(PRINCIPAL, 0.5, 0.0)
    n0 = math.ceil(beta - 1.0)
    bottom = modes.mode(modes.MASSLESS_BETA, 0.0, n0, beta_plus=beta_plus,
                        beta_minus=beta_minus, spec=spec)
    down = apply_ladder(-1, bottom, spec=spec)
    top = modes.mode(modes.MASSLESS_BETA, 0.0, n0 - 1, beta_plus=beta_plus,
                     beta_minus=beta_minus, spec=spec)
    up = apply_ladder(+1, top, spec=spec)
    if (down.image_norm <= _ANNIHILATION_TOL
            and up.image_norm <= _ANNIHILATION_TOL):
        return _pair_labels(bottom.omega)
    return UIRLabel(PRINCIPAL, 0.5, _reduced_mu(bottom.omega))


def classify(family, M=0.0, beta_plus=None, beta_minus=None,
             spec=None) -> Union[UIRLabel, Tuple[UIRLabel, UIRLabel]]:
    """Identify the unitary summands carried by a family's mode set.

    Returns a single label for the irreducible cases and a
    (positive, negative) pair when the frequency set splits into a
    lowest-weight and a highest-weight summand.  The verdict comes
    from the measured ladder evidence, not from a lookup table.
    """
    spec = _quad_spec(spec)
    if family == modes.MASSLESS_BETA:
        return _classify_beta(beta_plus, beta_minus, spec)
    if beta_plus is not None or beta_minus is not None:
        raise ValidationError(
            "boundary angles only parametrize the diagonal massless family")
    if family in _MIRROR:
        return _classify_mirror(family, M, spec)
    if family in _INTEGER:
        return _classify_integer(family, M, spec)
    raise ValidationError(f"unknown family {family!r}")


def invariant_frequency_splitting(family, M=0.0, beta_plus=None,
                                  beta_minus=None, spec=None) -> bool:
    """Whether the mode set splits into a discrete/mock pair."""
    verdict = classify(family, M=M, beta_plus=beta_plus,
                       beta_minus=beta_minus, spec=spec)
    return isinstance(verdict, tuple)


# ---------------------------------------------------------------------------
# Chiral equivalence of equal-sum massless boundary angle pairs


def chiral_partner_residual(beta_plus_1, beta_minus_1, beta_plus_2,
                            beta_minus_2, n=0, spec=None) -> float:
    """L2 distance between a rotated mode and its equal-sum partner.

    Two diagonal massless families whose boundary angles share the same
    sum are unitarily related by a constant chiral rotation; this
    returns || R(theta) Psi_n^{(1)} - Psi_n^{(2)} || with
    theta = beta_plus_1 - beta_plus_2.
    """
    if abs((beta_plus_1 + beta_minus_1)
           - (beta_plus_2 + beta_minus_2)) > 1e-12:
        raise ValidationError(
            "chiral partners must share the boundary angle sum")
    spec = _quad_spec(spec)
    m1 = modes.mode(modes.MASSLESS_BETA, 0.0, n, beta_plus=beta_plus_1,
                    beta_minus=beta_minus_1, spec=spec)
    m2 = modes.mode(modes.MASSLESS_BETA, 0.0, n, beta_plus=beta_plus_2,
                    beta_minus=beta_minus_2, spec=spec)
    rot = algebra.chiral_matrix(beta_plus_1 - beta_plus_2)

    def diff(rho, up, um):
        v1 = m1.spatial(rho, up, um)
        return np.einsum("ij,...j->...i", rot, v1) - m2.spatial(rho, up, um)

    return _norm(diff, spec)
