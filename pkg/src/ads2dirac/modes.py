"""Spatial solutions of the strip Dirac system and its normalized mode families.

At frequency omega the two spatial components satisfy the coupled
first-order system

    phi1' + M sec(rho) phi1 =  omega phi2,
   -phi2' + M sec(rho) phi2 =  omega phi1,

on rho in (-pi/2, pi/2).  Closed forms exist in every mass regime:
trigonometric at M=0, Gauss hypergeometric for non-half-integer M, and
Ferrers-function pairs at M = k + 1/2.  All evaluators accept the
endpoint offsets u+ = pi/4 - rho/2 and u- = pi/4 + rho/2 alongside rho
so that boundary-layer points never lose precision to cancellation.
"""

from __future__ import annotations

import math
import cmath
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import quad, specfun
from .errors import DomainError, ValidationError

__all__ = [
    "MASSLESS", "LOW_MASS", "GENERIC_MASS", "HALF_INTEGER",
    "DIRICHLET_I", "DIRICHLET_II", "DIRICHLET_III", "DIRICHLET_IV",
    "MASSLESS_BETA", "HALF_INTEGER_V", "HALF_MASS_VI", "FAMILIES",
    "MassRegime", "mass_regime",
    "GeneralSolution", "general_solution",
    "weighted_components", "TransitionCoefficients",
    "transition_coefficients", "BoundaryData", "boundary_data",
    "SpinorMode", "mode", "printed_normalization", "coupled_residual",
]

MASSLESS = "massless"
LOW_MASS = "low"
GENERIC_MASS = "generic"
HALF_INTEGER = "half-integer"

DIRICHLET_I = "dirichlet1"
DIRICHLET_II = "dirichlet2"
DIRICHLET_III = "dirichlet3"
DIRICHLET_IV = "dirichlet4"
MASSLESS_BETA = "beta"
HALF_INTEGER_V = "half-integer-v"
HALF_MASS_VI = "half-mass-vi"

FAMILIES = (DIRICHLET_I, DIRICHLET_II, DIRICHLET_III, DIRICHLET_IV,
            MASSLESS_BETA, HALF_INTEGER_V, HALF_MASS_VI)

_QUARTER_PI = 0.25 * np.pi


@dataclass(frozen=True)
class MassRegime:
    """Mass value together with its closed-form solution branch."""

    M: float
    regime: str

    @property
    def half_index(self):
        """k in M = k + 1/2; only defined on the half-integer branch."""
        if self.regime != HALF_INTEGER:
            raise ValidationError(f"mass {self.M} is not half-integer")
        return int(round(self.M - 0.5))


def mass_regime(M):
    """Classify a mass into {massless, low, generic, half-integer}.

    The boundary at M = 1/2 is decided by exact float comparison: the
    hypergeometric closed form degenerates exactly when M - 1/2 is a
    nonnegative integer, and only there.
    """
    m = float(M)
    if not math.isfinite(m) or m < 0.0:
        raise ValidationError(f"mass {M!r} must be finite and nonnegative")
    if m == 0.0:
        return MassRegime(m, MASSLESS)
    if m < 0.5:
        return MassRegime(m, LOW_MASS)
    if float(m - 0.5).is_integer():
        return MassRegime(m, HALF_INTEGER)
    return MassRegime(m, GENERIC_MASS)


def _grid(rho, u_plus, u_minus):
    """Broadcast (rho, u+, u-) to flat float arrays; derive u's if absent."""
    rho = np.asarray(rho, dtype=np.float64)
    if u_plus is None or u_minus is None:
        u_plus = _QUARTER_PI - 0.5 * rho
        u_minus = _QUARTER_PI + 0.5 * rho
    else:
        u_plus = np.asarray(u_plus, dtype=np.float64)
        u_minus = np.asarray(u_minus, dtype=np.float64)
    shape = np.broadcast_shapes(rho.shape, u_plus.shape, u_minus.shape)
    rho = np.broadcast_to(rho, shape).ravel()
    u_plus = np.broadcast_to(u_plus, shape).ravel()
    u_minus = np.broadcast_to(u_minus, shape).ravel()
    if rho.size and (u_plus.min() <= 0.0 or u_minus.min() <= 0.0):
        raise DomainError("evaluation point outside the open strip")
    return shape, rho, u_plus, u_minus


# ---------------------------------------------------------------------------
# General two-parameter solutions


@dataclass(frozen=True)
class GeneralSolution:
    """Two-parameter frequency-omega solution in a fixed mass regime.

    The second component is tied to the first through the first-order
    system itself; C1 and C2 are the only free constants.
    """

    M: float
    omega: complex
    c1: complex
    c2: complex
    regime: str

    def spatial(self, rho, u_plus=None, u_minus=None):
        """Both components as a complex array of shape rho.shape + (2,)."""
        shape, rho, up, um = _grid(rho, u_plus, u_minus)
        if self.regime == MASSLESS:
            out = self._trigonometric(rho)
        elif self.omega == 0:
            out = self._decoupled(up, um)
        elif self.regime == HALF_INTEGER:
            out = self._legendre(up, um)
        else:
            out = self._hypergeometric(up, um)
        return out.reshape(shape + (2,))

    def phi1(self, rho):
        return self.spatial(rho)[..., 0]

    def phi2(self, rho):
        return self.spatial(rho)[..., 1]

    def _trigonometric(self, rho):
        w, c1, c2 = self.omega, self.c1, self.c2
        cr = np.cos(w * rho)
        sr = np.sin(w * rho)
        out = np.empty(rho.shape + (2,), dtype=np.complex128)
        out[..., 0] = c1 * cr + c2 * sr
        out[..., 1] = -c1 * sr + c2 * cr
        return out

    def _decoupled(self, up, um):
        # omega = 0: the system splits; constants scaled as the omega -> 0
        # limit of the hypergeometric branch.
        M, c1, c2 = self.M, self.c1, self.c2
        sig = np.sin(up) / np.sin(um)
        out = np.empty(up.shape + (2,), dtype=np.complex128)
        out[..., 0] = (2.0 * M + 1.0) * c1 * sig ** M
        out[..., 1] = (2.0 * M - 1.0) * c2 * sig ** (-M)
        return out

    def _hypergeometric(self, up, um):
        M, w, c1, c2 = self.M, self.omega, self.c1, self.c2
        sp, sm = np.sin(up), np.sin(um)
        out = np.zeros(up.shape + (2,), dtype=np.complex128)
        for i in range(up.size):
            z, oz = sp[i] * sp[i], sm[i] * sm[i]
            if z <= 0.5:
                def hyp(a, b, c):
                    return specfun.hyp2f1(a, b, c, z)
            else:
                def hyp(a, b, c):
                    return specfun.hyp2f1_from_complement(a, b, c, oz)
            sig = (sp[i] / sm[i]) ** M
            cr = 2.0 * sp[i] * sm[i]
            if c1 != 0:
                out[i, 0] += (2.0 * M + 1.0) * c1 * sig * hyp(w, -w, 0.5 + M)
                out[i, 1] += w * c1 * cr * sig * hyp(1 + w, 1 - w, 1.5 + M)
            if c2 != 0:
                out[i, 0] += w * c2 * cr / sig * hyp(1 + w, 1 - w, 1.5 - M)
                out[i, 1] += (2.0 * M - 1.0) * c2 / sig * hyp(w, -w, 0.5 - M)
        return out

    def _legendre(self, up, um):
        k = int(round(self.M - 0.5))
        w, c1, c2 = self.omega, self.c1, self.c2
        sp, sm = np.sin(up), np.sin(um)
        out = np.empty(up.shape + (2,), dtype=np.complex128)
        for i in range(up.size):
            if up[i] <= um[i]:
                side, z = +1, sp[i] * sp[i]
            else:
                side, z = -1, sm[i] * sm[i]
            pw, qw = specfun.ferrers_pq_from_complement(w, k, z, side)
            pv, qv = specfun.ferrers_pq_from_complement(w - 1.0, k, z, side)
            rt = math.sqrt(sp[i] / sm[i])
            out[i, 0] = rt * (c1 * (pw + pv) + c2 * (qw + qv))
            out[i, 1] = (c1 * (pv - pw) + c2 * (qv - qw)) / rt
        return out


def general_solution(M, omega, c1, c2):
    """Construct the general solution for any mass and complex frequency."""
    reg = mass_regime(M)
    return GeneralSolution(reg.M, complex(omega), complex(c1), complex(c2),
                           reg.regime)


def weighted_components(sol):
    """Evaluators for the endpoint-regular weighted components.

    The first component is damped by sigma^{-M}, the second by
    sigma^{+M}; for 0 <= M < 1/2 both acquire finite endpoint limits.
    """
    if not isinstance(sol, GeneralSolution):
        raise ValidationError("weighted_components expects a GeneralSolution")
    if sol.M >= 0.5:
        raise ValidationError(
            "weighted components have guaranteed endpoint limits only for "
            f"M < 1/2 (got M={sol.M})")

    def _weighted(col, expo):
        def evaluate(rho, u_plus=None, u_minus=None):
            shape, r, up, um = _grid(rho, u_plus, u_minus)
            vals = sol.spatial(r, up, um).reshape(-1, 2)[:, col]
            vals = vals * (np.sin(up) / np.sin(um)) ** expo
            return vals.reshape(shape)
        return evaluate

    return _weighted(0, -sol.M), _weighted(1, sol.M)


# ---------------------------------------------------------------------------
# Boundary data


@dataclass(frozen=True)
class TransitionCoefficients:
    """Endpoint connection coefficients of the hypergeometric branch."""

    a1: complex
    a2: complex
    b1: complex
    b2: complex


def transition_coefficients(M, omega):
    """Gamma-function connection coefficients at mass M, frequency omega.

    Frequency-dependent factors enter through reciprocal gammas, so the
    coefficients are entire in omega; their zeros encode the quantized
    spectra.  Requires M < 1/2 (pole of the mirrored prefactors beyond).
    """
    m = float(M)
    if m >= 0.5:
        raise ValidationError(f"transition coefficients need M < 1/2, got {M}")
    w = complex(omega)
    rg = specfun.rgamma
    g = math.gamma
    a1 = g(0.5 + m) ** 2 * rg(0.5 + m + w) * rg(0.5 + m - w)
    a2 = g(0.5 + m) * g(-0.5 - m) * rg(w) * rg(-w)
    b1 = g(1.5 - m) * g(-m - 0.5) * rg(0.5 - m + w) * rg(0.5 - m - w)
    b2 = g(1.5 - m) * g(0.5 + m) * rg(1.0 + w) * rg(1.0 - w)
    return TransitionCoefficients(complex(a1), complex(a2),
                                  complex(b1), complex(b2))


@dataclass(frozen=True)
class BoundaryData:
    """Weighted component limits in the order (+1, +2, -1, -2)."""

    plus1: complex
    plus2: complex
    minus1: complex
    minus2: complex

    def vector(self):
        return np.array([self.plus1, self.plus2, self.minus1, self.minus2])


def boundary_data(sol):
    """Closed-form endpoint limits of the weighted components.

    Valid for 0 <= M < 1/2.  The cross terms at the lower endpoint carry
    a factor 2 multiplying omega*B2; this factor is fixed by the exact
    endpoint limits of the weighted components (sixteen-digit agreement
    with Richardson-extrapolated numerics) and is what the closed form
    below implements.
    """
    if not isinstance(sol, GeneralSolution):
        raise ValidationError("boundary_data expects a GeneralSolution")
    if sol.M >= 0.5:
        raise ValidationError(
            f"boundary data closed forms require M < 1/2 (got M={sol.M})")
    w, c1, c2 = sol.omega, sol.c1, sol.c2
    if sol.regime == MASSLESS:
        ch = cmath.cos(0.5 * math.pi * w)
        sh = cmath.sin(0.5 * math.pi * w)
        return BoundaryData(plus1=c1 * ch + c2 * sh,
                            plus2=-c1 * sh + c2 * ch,
                            minus1=c1 * ch - c2 * sh,
                            minus2=c1 * sh + c2 * ch)
    M = sol.M
    t = transition_coefficients(M, w)
    tm = transition_coefficients(-M, w)
    return BoundaryData(
        plus1=(2.0 * M + 1.0) * c1,
        plus2=(2.0 * M - 1.0) * c2,
        minus1=(2.0 * M + 1.0) * c1 * t.a1 + 2.0 * c2 * w * t.b2,
        minus2=2.0 * c1 * w * tm.b2 + (2.0 * M - 1.0) * c2 * tm.a1)


# ---------------------------------------------------------------------------
# Normalized mode families


@dataclass(frozen=True)
class SpinorMode:
    """A single normalized frequency eigenmode.

    ``normalization`` is the numerically computed constant multiplying
    the family's polynomial structure; the squared norm of ``spatial``
    under the spatial inner product is 1 by construction.  Negative
    indices label the negative-frequency partners with the sign
    conventions of the family's printed mode table.
    """

    family: str
    M: float
    n: int
    omega: float
    normalization: float
    beta_plus: Optional[float] = None
    beta_minus: Optional[float] = None
    _structure: Callable = field(repr=False, compare=False, default=None)

    def spatial(self, rho, u_plus=None, u_minus=None):
        shape, r, up, um = _grid(rho, u_plus, u_minus)
        vals = self.normalization * self._structure(r, up, um)
        return vals.reshape(shape + (2,))

    def phi1(self, rho):
        return self.spatial(rho)[..., 0]

    def phi2(self, rho):
        return self.spatial(rho)[..., 1]

    def psi(self, t, rho):
        """Full mode including the e^{-i omega t} phase (t scalar)."""
        return np.exp(-1j * self.omega * float(t)) * self.spatial(rho)


def _jacobi_flat(n, a, b, x):
    return specfun.jacobi_p_values(n, a, b, np.ascontiguousarray(x))


def _type1_structure(M, m, sgn):
    # (cos rho)^M ((1+s)^{1/2} P_m^{(M-1/2, M+1/2)}, +/- (1-s)^{1/2} P_m^{(M+1/2, M-1/2)})
    a, b = M - 0.5, M + 0.5

    def structure(rho, up, um):
        sp, sm = np.sin(up), np.sin(um)
        s = (sm - sp) * (sm + sp)
        wgt = (2.0 * sp * sm) ** M
        out = np.empty(up.shape + (2,), dtype=np.complex128)
        out[..., 0] = wgt * math.sqrt(2.0) * sm * _jacobi_flat(m, a, b, s)
        out[..., 1] = sgn * wgt * math.sqrt(2.0) * sp * _jacobi_flat(m, b, a, s)
        return out

    return structure


def _type2_structure(M, m, sgn):
    a, b = 0.5 - M, -0.5 - M

    def structure(rho, up, um):
        sp, sm = np.sin(up), np.sin(um)
        s = (sm - sp) * (sm + sp)
        wgt = (2.0 * sp * sm) ** (-M)
        out = np.empty(up.shape + (2,), dtype=np.complex128)
        out[..., 0] = wgt * math.sqrt(2.0) * sp * _jacobi_flat(m, a, b, s)
        out[..., 1] = -sgn * wgt * math.sqrt(2.0) * sm * _jacobi_flat(m, b, a, s)
        return out

    return structure


def _type3_structure(M, m, sgn):
    # sigma^{-M} (cos rho P_{m-1}^{(1/2-M, 1/2+M)}, -/+ 2 P_m^{(-1/2-M, -1/2+M)})
    def structure(rho, up, um):
        sp, sm = np.sin(up), np.sin(um)
        s = (sm - sp) * (sm + sp)
        wgt = (sp / sm) ** (-M)
        out = np.empty(up.shape + (2,), dtype=np.complex128)
        if m == 0:
            out[..., 0] = 0.0
        else:
            out[..., 0] = wgt * 2.0 * sp * sm * _jacobi_flat(
                m - 1, 0.5 - M, 0.5 + M, s)
        out[..., 1] = -sgn * wgt * 2.0 * _jacobi_flat(m, -0.5 - M, -0.5 + M, s)
        return out

    return structure


def _type4_structure(M, m, sgn):
    def structure(rho, up, um):
        sp, sm = np.sin(up), np.sin(um)
        s = (sm - sp) * (sm + sp)
        wgt = (sp / sm) ** M
        out = np.empty(up.shape + (2,), dtype=np.complex128)
        out[..., 0] = wgt * 2.0 * _jacobi_flat(m, -0.5 + M, -0.5 - M, s)
        if m == 0:
            out[..., 1] = 0.0
        else:
            out[..., 1] = sgn * wgt * 2.0 * sp * sm * _jacobi_flat(
                m - 1, 0.5 + M, 0.5 - M, s)
        return out

    return structure


def _beta_structure(omega, shift, odd):
    def structure(rho, up, um):
        arg = omega * rho - shift
        out = np.empty(rho.shape + (2,), dtype=np.complex128)
        if odd:
            out[..., 0] = np.sin(arg)
            out[..., 1] = np.cos(arg)
        else:
            out[..., 0] = np.cos(arg)
            out[..., 1] = -np.sin(arg)
        return out

    return structure


def _check_betas(beta_plus, beta_minus):
    if beta_plus is None or beta_minus is None:
        raise ValidationError(
            "the diagonal massless family needs both boundary angles")
    bp, bm = float(beta_plus), float(beta_minus)
    for val in (bp, bm):
        if not 0.0 <= val <= math.pi:
            raise ValidationError(f"boundary angle {val} outside [0, pi]")
    return bp, bm


def mode(family, M, n, beta_plus=None, beta_minus=None, spec=None):
    """Build the normalized mode of a family at integer index n.

    Frequencies follow the family spectra exactly; a negative n selects
    the negative-frequency partner (for the integer-spaced families III
    and IV the index is the frequency itself and n=0 is the static
    mode).  ``spec`` overrides the quadrature scheme used for the
    normalization integral.
    """
    if family not in FAMILIES:
        raise ValidationError(f"unknown family {family!r}")
    if family != MASSLESS_BETA and (beta_plus is not None
                                    or beta_minus is not None):
        raise ValidationError(
            "boundary angles only parametrize the diagonal massless family")
    reg = mass_regime(M)
    n = int(n)
    m = abs(n)
    sgn = 1 if n >= 0 else -1
    bp = bm = None

    if family == DIRICHLET_I:
        omega = sgn * (0.5 + reg.M + m)
        structure = _type1_structure(reg.M, m, sgn)
    elif family == DIRICHLET_II:
        if reg.regime not in (MASSLESS, LOW_MASS):
            raise ValidationError(
                f"family {family} requires 0 <= M < 1/2, got M={M}")
        omega = sgn * (0.5 - reg.M + m)
        structure = _type2_structure(reg.M, m, sgn)
    elif family == DIRICHLET_III:
        if reg.regime not in (MASSLESS, LOW_MASS):
            raise ValidationError(
                f"family {family} requires 0 <= M < 1/2, got M={M}")
        omega = float(n)
        structure = _type3_structure(reg.M, m, sgn)
    elif family == DIRICHLET_IV:
        if reg.regime not in (MASSLESS, LOW_MASS):
            raise ValidationError(
                f"family {family} requires 0 <= M < 1/2, got M={M}")
        omega = float(n)
        structure = _type4_structure(reg.M, m, sgn)
    elif family == MASSLESS_BETA:
        if reg.regime != MASSLESS:
            raise ValidationError("the diagonal family exists only at M=0")
        bp, bm = _check_betas(beta_plus, beta_minus)
        beta = (bp + bm) / math.pi
        omega = n + 1.0 - beta
        structure = _beta_structure(omega, 0.5 * (bp - bm), n % 2 == 1)
    elif family == HALF_INTEGER_V:
        if reg.regime != HALF_INTEGER:
            raise ValidationError(
                f"family {family} requires M = k + 1/2, got M={M}")
        omega = sgn * (reg.half_index + 1.0 + m)
        structure = _type1_structure(reg.M, m, sgn)
    else:
        if reg.M != 0.5:
            raise ValidationError(f"family {family} requires M = 1/2, got M={M}")
        omega = sgn * (1.0 + m)
        structure = _type1_structure(reg.M, m, sgn)

    value = complex(quad.inner_product(structure, structure, spec=spec))
    if not (value.real > 0.0 and abs(value.imag) <= 1e-9 * value.real):
        raise ValidationError(f"mode norm came out non-positive: {value}")
    return SpinorMode(family=family, M=reg.M, n=n, omega=float(omega),
                      normalization=1.0 / math.sqrt(value.real),
                      beta_plus=bp, beta_minus=bm, _structure=structure)


def printed_normalization(mode_obj):
    """The closed-form normalization constant as printed per family.

    Returned for audit against ``SpinorMode.normalization``; the half
    mass family's printed sqrt(n + 1/2) is known to disagree with the
    numerically correct constant sqrt(n+1)/2 (see the verification
    report), and this function deliberately reproduces the printed
    value.
    """
    fam, M, m = mode_obj.family, mode_obj.M, abs(mode_obj.n)
    lg = math.lgamma
    if fam == DIRICHLET_I:
        return math.exp(0.5 * (lg(m + 1.0) + lg(m + 2.0 * M + 1.0))
                        - (M + 0.5) * math.log(2.0) - lg(0.5 + M + m))
    if fam == DIRICHLET_II:
        return math.exp(0.5 * (lg(m + 1.0) + lg(m - 2.0 * M + 1.0))
                        - (0.5 - M) * math.log(2.0) - lg(0.5 - M + m))
    if fam in (DIRICHLET_III, DIRICHLET_IV):
        return math.exp(lg(m + 1.0) - math.log(2.0)
                        - 0.5 * (lg(0.5 + M + m) + lg(0.5 - M + m)))
    if fam == MASSLESS_BETA:
        return 1.0 / math.sqrt(math.pi)
    if fam == HALF_INTEGER_V:
        k = int(round(M - 0.5))
        return math.exp(0.5 * (lg(m + 1.0) + lg(2.0 * k + m + 2.0))
                        - (k + 1.0) * math.log(2.0) - lg(m + k + 1.0))
    return math.sqrt(m + 0.5)


# ---------------------------------------------------------------------------
# Residual of the coupled first-order system

_FD_OFFSETS = np.arange(-4, 5)
_FD_WEIGHTS = np.array([1.0 / 280.0, -4.0 / 105.0, 1.0 / 5.0, -4.0 / 5.0, 0.0,
                        4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0])
_EDGE_SWITCH = 0.3


def coupled_residual(spatial, M, omega, npts=32):
    """Worst scaled residual of the first-order system at interior points.

    ``spatial`` maps (rho, u+, u-) to complex values of shape (..., 2).
    Derivatives come from an eighth-order stencil; inside the boundary
    layers the stencil is taken in log(u) of the nearest endpoint, where
    the solution's derivatives stay bounded, and converted back.  Points
    are Chebyshev-spaced on [-pi/2 + 1e-3, pi/2 - 1e-3].
    """
    npts = int(npts)
    if npts < 1:
        raise ValidationError("need at least one collocation point")
    M = float(M)
    w = complex(omega)
    half = 0.5 * np.pi - 1e-3
    theta = (2.0 * np.arange(npts) + 1.0) * np.pi / (2.0 * npts)
    centers = half * np.cos(theta)

    rows_rho = np.empty((npts, 9))
    rows_up = np.empty((npts, 9))
    rows_um = np.empty((npts, 9))
    conv = np.empty(npts)
    h_rho = min(0.01, 0.1 / (1.0 + abs(w)))
    h_tau = min(0.02, 0.2 / (1.0 + abs(w)))
    for i, rc in enumerate(centers):
        upc = _QUARTER_PI - 0.5 * rc
        umc = _QUARTER_PI + 0.5 * rc
        if upc < _EDGE_SWITCH:
            ups = upc * np.exp(_FD_OFFSETS * h_tau)
            ums = 0.5 * np.pi - ups
            conv[i] = -1.0 / (2.0 * upc * h_tau)
        elif umc < _EDGE_SWITCH:
            ums = umc * np.exp(_FD_OFFSETS * h_tau)
            ups = 0.5 * np.pi - ums
            conv[i] = 1.0 / (2.0 * umc * h_tau)
        else:
            ups = upc - 0.5 * _FD_OFFSETS * h_rho
            ums = umc + 0.5 * _FD_OFFSETS * h_rho
            conv[i] = 1.0 / h_rho
        rows_up[i] = ups
        rows_um[i] = ums
        rows_rho[i] = ums - ups

    vals = np.asarray(spatial(rows_rho.ravel(), rows_up.ravel(),
                              rows_um.ravel()))
    vals = vals.reshape(npts, 9, 2)
    deriv = np.einsum("j,ijc->ic", _FD_WEIGHTS, vals) * conv[:, None]
    phi = vals[:, 4, :]
    sec = 1.0 / (2.0 * np.sin(rows_up[:, 4]) * np.sin(rows_um[:, 4]))

    r1 = deriv[:, 0] + M * sec * phi[:, 0] - w * phi[:, 1]
    r2 = -deriv[:, 1] + M * sec * phi[:, 1] - w * phi[:, 0]
    s1 = 1.0 + np.abs(deriv[:, 0]) + np.abs(M * sec * phi[:, 0]) \
        + np.abs(w * phi[:, 1])
    s2 = 1.0 + np.abs(deriv[:, 1]) + np.abs(M * sec * phi[:, 1]) \
        + np.abs(w * phi[:, 0])
    return float(max(np.max(np.abs(r1) / s1), np.max(np.abs(r2) / s2)))
