"""Fixed 2x2 spinor algebra on the static AdS2 strip.

Gamma matrices in the representation used throughout the package, the boost
generator Sigma01, charge conjugation, parity, chiral rotations, and the
coefficient functions of the spinorial Lie derivatives along the three
Killing directions of the strip metric.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ValidationError

__all__ = [
    "ETA",
    "GAMMA0",
    "GAMMA1",
    "SIGMA01",
    "CC_MATRIX",
    "charge_conjugate",
    "parity",
    "chiral_matrix",
    "chiral_rotation",
    "KillingField",
    "KILLING_FIELDS",
    "killing_field",
]

ETA = np.diag([-1.0, 1.0])

GAMMA0 = np.array([[0.0, 1.0j], [1.0j, 0.0]])
GAMMA1 = np.array([[-1.0, 0.0], [0.0, 1.0]], dtype=complex)

# Boost generator (1/4)[gamma^0, gamma^1] and the charge conjugation matrix
# C = -2 Sigma01, chosen so that C (gamma^0)^T = -gamma^1.
SIGMA01 = 0.25 * (GAMMA0 @ GAMMA1 - GAMMA1 @ GAMMA0)
CC_MATRIX = -2.0 * SIGMA01

for _m in (ETA, GAMMA0, GAMMA1, SIGMA01, CC_MATRIX):
    _m.setflags(write=False)
del _m


def _as_spinor_values(values):
    v = np.asarray(values, dtype=complex)
    if v.ndim == 0 or v.shape[-1] != 2:
        raise ValidationError(
            "spinor values need a trailing component axis of size 2"
        )
    return v


def charge_conjugate(values):
    """Pointwise charge conjugate -gamma^1 conj(Phi) = diag(1,-1) conj(Phi).

    ``values`` is any array whose last axis holds the two spinor components.
    Applying the map twice returns the original values.
    """
    v = _as_spinor_values(values)
    out = np.conj(v)
    out[..., 1] = -out[..., 1]
    return out


def parity(rho, values):
    """Parity image i gamma^0 Phi(-rho) of values sampled on a symmetric grid.

    ``rho`` must be a 1d grid symmetric about 0 (rho[k] == -rho[-1-k]) and
    ``values`` has shape (len(rho), 2).  Raises ValidationError otherwise.
    Applying the map twice returns the original values: (i gamma^0)^2 = +I
    since (gamma^0)^2 = -I, and the reflection cancels.
    """
    r = np.asarray(rho, dtype=float)
    v = _as_spinor_values(values)
    if r.ndim != 1 or r.size == 0:
        raise ValidationError("rho must be a non-empty 1d grid")
    if v.ndim != 2 or v.shape[0] != r.size:
        raise ValidationError("values must have shape (len(rho), 2)")
    scale = max(1.0, float(np.max(np.abs(r))))
    if float(np.max(np.abs(r + r[::-1]))) > 1e-12 * scale:
        raise ValidationError("rho grid is not symmetric about 0")
    reflected = v[::-1, :]
    out = np.empty_like(v)
    # i gamma^0 = [[0, -1], [-1, 0]]
    out[:, 0] = -reflected[:, 1]
    out[:, 1] = -reflected[:, 0]
    return out


def chiral_matrix(theta):
    """Rotation matrix exp(-2i theta Sigma01), which is real."""
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, s], [-s, c]])


def chiral_rotation(theta, values):
    """Apply the chiral rotation by ``theta`` pointwise to spinor values."""
    v = _as_spinor_values(values)
    return np.einsum("ij,...j->...i", chiral_matrix(theta), v)


@dataclass(frozen=True)
class KillingField:
    """Spinorial Lie derivative along one Killing direction of the strip.

    The operator is coeff_t * d_t + coeff_rho * d_rho + coeff_sigma * Sigma01
    with scalar coefficient functions of (t, rho).
    """

    name: str
    coeff_t: Callable[[float, float], float]
    coeff_rho: Callable[[float, float], float]
    coeff_sigma: Callable[[float, float], float]

    def apply(self, psi, psi_t, psi_rho, t, rho):
        """Evaluate the Lie derivative of an analytically known spinor.

        ``psi``, ``psi_t`` and ``psi_rho`` map a point (t, rho) to the spinor
        and its first partials, each a length-2 complex sequence.  Returns the
        derivative spinor at the same point.
        """
        value = self.coeff_t(t, rho) * np.asarray(psi_t(t, rho), dtype=complex)
        value = value + self.coeff_rho(t, rho) * np.asarray(
            psi_rho(t, rho), dtype=complex
        )
        s = self.coeff_sigma(t, rho)
        if s != 0.0:
            value = value + s * (SIGMA01 @ np.asarray(psi(t, rho), dtype=complex))
        return value


KILLING_FIELDS = {
    "xi0": KillingField(
        "xi0",
        coeff_t=lambda t, rho: 1.0,
        coeff_rho=lambda t, rho: 0.0,
        coeff_sigma=lambda t, rho: 0.0,
    ),
    "xi1": KillingField(
        "xi1",
        coeff_t=lambda t, rho: np.cos(t) * np.sin(rho),
        coeff_rho=lambda t, rho: np.sin(t) * np.cos(rho),
        coeff_sigma=lambda t, rho: np.cos(t) * np.cos(rho),
    ),
    "xi2": KillingField(
        "xi2",
        coeff_t=lambda t, rho: -np.sin(t) * np.sin(rho),
        coeff_rho=lambda t, rho: np.cos(t) * np.cos(rho),
        coeff_sigma=lambda t, rho: -np.sin(t) * np.cos(rho),
    ),
}


def killing_field(name):
    """Look up one of the fields xi0, xi1, xi2 by name."""
    try:
        return KILLING_FIELDS[name]
    except KeyError:
        raise ValidationError(f"unknown Killing field {name!r}") from None
