"""Endpoint-safe quadrature and norms on the open strip (-pi/2, pi/2).

Integrands are sampled through the half-angle distances u+ = pi/4 - rho/2 and
u- = pi/4 + rho/2 from the right and left wall, so that evaluators can form
quantities like 1 - sin(rho) = 2 sin^2(u+) without cancellation.  The default
scheme is a double-exponential transformation whose refinement levels enlarge
the resolved neighbourhood of the walls while doubling the node density;
integrable power singularities u^(-p), p < 1, converge, while non-integrable
ones show up as monotone growth of the level values and are reported as a
ConvergenceError.  A composite Gauss-Legendre scheme is provided for bounded
integrands.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, NamedTuple

import numpy as np

from .errors import ConvergenceError, ValidationError

__all__ = [
    "DEFAULT_TOLERANCE",
    "QuadratureSpec",
    "QuadratureResult",
    "ExponentFit",
    "integrate",
    "inner_product",
    "endpoint_exponent_fit",
]

DEFAULT_TOLERANCE = 1e-11
TOLERANCE_ENV = "ADS2_QUAD_TOL"

_SCHEMES = ("double-exponential", "gauss-legendre")

# Default inset keeps u^2 above the subnormal range so evaluators may square
# wall distances without underflowing to 0/0 against the quadrature weight.
_DEFAULT_INSET = 1e-150


@dataclass(frozen=True)
class QuadratureSpec:
    """Scheme selection and stopping control for strip integrals."""

    scheme: str = "double-exponential"
    inset: float = _DEFAULT_INSET
    tolerance: float | None = None
    max_levels: int = 4

    def __post_init__(self):
        if self.scheme not in _SCHEMES:
            raise ValidationError(f"unknown quadrature scheme {self.scheme!r}")
        if not 0.0 <= self.inset <= 0.01:
            raise ValidationError("inset must lie in [0, 0.01]")
        if self.tolerance is not None and not self.tolerance > 0.0:
            raise ValidationError("tolerance must be positive")
        if not 1 <= self.max_levels <= 8:
            raise ValidationError("max_levels must lie in 1..8")

    def resolved_tolerance(self):
        """Explicit tolerance, else the ADS2_QUAD_TOL override, else 1e-11."""
        if self.tolerance is not None:
            return self.tolerance
        raw = os.environ.get(TOLERANCE_ENV)
        if raw is None:
            return DEFAULT_TOLERANCE
        try:
            tol = float(raw)
        except ValueError:
            raise ValidationError(
                f"{TOLERANCE_ENV} must be a positive float, got {raw!r}"
            ) from None
        if not tol > 0.0:
            raise ValidationError(f"{TOLERANCE_ENV} must be positive")
        return tol


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    error_estimate: float
    levels_used: int


class ExponentFit(NamedTuple):
    exponent: float
    log_factor: bool


# ------------------------------------------------------- double exponential


def _de_level_params(level):
    # widening the t-window per level makes a divergent integrand grow
    # monotonically instead of saturating at a fixed truncation
    return min(3.5 + level, 7.0), 0.5 / 2**level


@lru_cache(maxsize=64)
def _de_nodes(t_max, step):
    n = int(math.floor(t_max / step + 1e-9))
    t = step * np.arange(-n, n + 1)
    v = 0.5 * math.pi * np.sinh(t)
    decay = np.exp(-2.0 * np.abs(v))
    near = 0.5 * math.pi * decay / (1.0 + decay)
    far = 0.5 * math.pi / (1.0 + decay)
    u_plus = np.where(v >= 0.0, near, far)
    u_minus = np.where(v >= 0.0, far, near)
    rho = 0.5 * math.pi * np.tanh(v)
    sech = 2.0 * np.exp(-np.abs(v)) / (1.0 + decay)
    weight = 0.25 * math.pi**2 * np.cosh(t) * sech**2
    keep = (u_plus > 0.0) & (u_minus > 0.0)
    out = (rho[keep], u_plus[keep], u_minus[keep], weight[keep])
    for arr in out:
        arr.setflags(write=False)
    return out


def _de_level(f, level, inset):
    t_max, step = _de_level_params(level)
    rho, u_plus, u_minus, weight = _de_nodes(t_max, step)
    if inset > 0.0:
        keep = (u_plus >= inset) & (u_minus >= inset)
        rho, u_plus = rho[keep], u_plus[keep]
        u_minus, weight = u_minus[keep], weight[keep]
    if rho.size == 0:
        raise ValidationError("inset removed every quadrature node")
    values = np.asarray(f(rho, u_plus, u_minus))
    if values.shape != rho.shape:
        raise ValidationError("integrand must return one value per node")
    contrib = step * weight * values
    total = complex(np.sum(contrib))
    edge = float(max(abs(contrib[0]), abs(contrib[-1])))
    return total, edge


# --------------------------------------------------- composite Gauss points

_GL_X, _GL_W = np.polynomial.legendre.leggauss(16)


def _gl_level(f, level, inset):
    # panels refine geometrically toward each wall; suitable for bounded
    # integrands only, mass below the panel floor is dropped
    floor = max(inset, 1e-14)
    quarter = 0.25 * math.pi
    panels = 8 + 4 * level
    bounds = quarter * (floor / quarter) ** (np.arange(panels + 1) / panels)
    total = 0.0j
    edge = 0.0
    for side in (1.0, -1.0):
        for j in range(panels):
            hi, lo = bounds[j], bounds[j + 1]
            mid, half = 0.5 * (hi + lo), 0.5 * (hi - lo)
            u = mid + half * _GL_X
            comp = 0.5 * math.pi - u
            if side > 0:
                u_plus, u_minus = u, comp
                rho = 0.5 * math.pi - 2.0 * u
            else:
                u_minus, u_plus = u, comp
                rho = -0.5 * math.pi + 2.0 * u
            values = np.asarray(f(rho, u_plus, u_minus))
            panel = 2.0 * half * complex(np.sum(_GL_W * values))
            total += panel
            if j == panels - 1:
                edge = max(edge, abs(panel))
    return total, edge


# ------------------------------------------------------------- driver logic


def _refine(level_eval, spec):
    tol = spec.resolved_tolerance()
    totals = []
    for level in range(spec.max_levels + 1):
        total, edge = level_eval(level)
        totals.append(total)
        if level > 0:
            err = abs(total - totals[-2])
            if math.isfinite(err) and err <= tol and edge <= tol:
                return QuadratureResult(total, err, level + 1)
    mags = [abs(t) for t in totals]
    ratios = [b / a if a > 0.0 else math.inf for a, b in zip(mags, mags[1:])]
    # two consecutive >10% growth steps mark divergence; growth saturates (and
    # may even decay) once the inset truncates the wall neighbourhood, so the
    # later levels are not required to keep growing
    consecutive = any(r1 > 1.1 and r2 > 1.1 for r1, r2 in zip(ratios, ratios[1:]))
    if consecutive and mags[0] > 0.0 and max(mags) > 3.0 * mags[0]:
        raise ConvergenceError("integral diverges under refinement")
    raise ConvergenceError(
        f"quadrature did not converge within {spec.max_levels + 1} levels"
    )


def integrate(f, spec=None):
    """Integrate f(rho, u_plus, u_minus) over the strip.

    Returns a QuadratureResult whose error_estimate is at most the resolved
    tolerance.  Raises ConvergenceError when refinement stalls, with a
    'diverges' message when the level values grow monotonically by more than
    ten percent per level.
    """
    spec = spec if spec is not None else QuadratureSpec()
    if spec.scheme == "double-exponential":
        return _refine(lambda level: _de_level(f, level, spec.inset), spec)
    return _refine(lambda level: _gl_level(f, level, spec.inset), spec)


def inner_product(phi_a, phi_b, spec=None):
    """Integral of conj(phi_a) . phi_b over the strip.

    The evaluators map node arrays (rho, u_plus, u_minus) to component arrays
    of shape (len(rho), 2).  Returns the complex inner product; convergence
    failures propagate from integrate().
    """

    def integrand(rho, u_plus, u_minus):
        a = np.asarray(phi_a(rho, u_plus, u_minus), dtype=complex)
        b = np.asarray(phi_b(rho, u_plus, u_minus), dtype=complex)
        if a.shape != rho.shape + (2,) or b.shape != rho.shape + (2,):
            raise ValidationError("evaluators must return (len(rho), 2) arrays")
        return np.sum(np.conj(a) * b, axis=-1)

    return integrate(integrand, spec).value


# -------------------------------------------------------- endpoint exponent


def _curvature_flags_log(x, y):
    one = np.ones_like(x)
    design0 = np.column_stack([one, x])
    design1 = np.column_stack([one, x, np.log(-x)])
    coef0 = np.linalg.lstsq(design0, y, rcond=None)[0]
    coef1 = np.linalg.lstsq(design1, y, rcond=None)[0]
    rms0 = float(np.sqrt(np.mean((y - design0 @ coef0) ** 2)))
    rms1 = float(np.sqrt(np.mean((y - design1 @ coef1) ** 2)))
    return rms0 > 5.0 * rms1 + 1e-12 and abs(float(coef1[2])) > 0.5 and rms0 > 1e-8


def endpoint_exponent_fit(phi, endpoint, eps_grid):
    """Fit the power of the squared amplitude against wall distance.

    ``endpoint`` is "+" or "-".  ``eps_grid`` must be a geometric sequence
    inside (1e-8, 1e-2).  Returns ExponentFit(exponent, log_factor) where the
    exponent is the least-squares slope of log(|Phi1|^2 + |Phi2|^2) against
    log(eps) and log_factor reports residual curvature of either component
    consistent with an extra log(eps) factor.
    """
    if endpoint not in ("+", "-"):
        raise ValidationError("endpoint must be '+' or '-'")
    eps = np.asarray(eps_grid, dtype=float)
    if eps.ndim != 1 or eps.size < 5:
        raise ValidationError("eps_grid needs at least five points")
    if np.any(eps <= 1e-8) or np.any(eps >= 1e-2):
        raise ValidationError("eps_grid must lie inside (1e-8, 1e-2)")
    ratios = eps[1:] / eps[:-1]
    if abs(ratios.max() - ratios.min()) > 1e-6 * abs(ratios[0]) or abs(
        ratios[0] - 1.0
    ) < 1e-9:
        raise ValidationError("eps_grid must be geometric")

    half = 0.5 * eps
    comp = 0.5 * math.pi - half
    if endpoint == "+":
        rho, u_plus, u_minus = 0.5 * math.pi - eps, half, comp
    else:
        rho, u_plus, u_minus = -0.5 * math.pi + eps, comp, half
    values = np.asarray(phi(rho, u_plus, u_minus), dtype=complex)
    if values.shape != rho.shape + (2,):
        raise ValidationError("evaluator must return a (len(eps), 2) array")

    power = np.abs(values) ** 2
    signal = power.sum(axis=-1)
    if not np.all(np.isfinite(signal)) or np.any(signal < 1e-280):
        raise ConvergenceError("endpoint signal underflowed; fit ill-conditioned")

    x = np.log(eps)
    slope = float(np.polyfit(x, np.log(signal), 1)[0])
    log_factor = False
    for k in (0, 1):
        component = power[:, k]
        if np.all(component > 1e-280):
            log_factor = log_factor or _curvature_flags_log(
                x, np.log(component)
            )
    return ExponentFit(slope, log_factor)
