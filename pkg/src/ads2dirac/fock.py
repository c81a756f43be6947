"""Truncated Fock quantization of the mode expansions and their charges.

The field operator is expanded over a family's normalized modes with
fermionic amplitudes, positive frequencies carrying annihilation
operators and the negative tower carrying creation operators.  Keeping
the first N frequencies on each side gives a finite fermionic Fock
space realized here through the graded tensor-product (sign-string)
construction, on which the three conserved charges become explicit
matrices:

  * massless diagonal family, tower base mu (lowest retained positive
    frequency offset, omega_j = j + mu):

        L+ = i sum_j (-1)^(j+1) [ (omega_j + 1/2) a_{j+1}^+ a_j
                                  + (j + 3/2 - mu) b_{j+1}^+ b_j ]
             + i (mu - 1/2) a_0^+ b_0^+,

    its adjoint-partner lowering charge, and the diagonal
    L0 = sum_j [ omega_j n^a_j + (j + 1 - mu) n^b_j ] + lambda with
    lambda = (mu - 1/2)^2 / 2.  The constant is fixed by the algebra:
    [L+, L-] = 2 L0 holds on every state below the truncation edge.

  * integer-spaced families (third/fourth, 0 <= M < 1/2), whose static
    mode contributes a single unpaired operator a_0:

        L+ = -i sum_{n>=1} C_n (a_{n+1}^+ a_n + b_{n+1}^+ b_n)
             + i C_0 (a_0^+ b_1^+ - a_1^+ a_0),

    with C_n = sqrt((n+M+1/2)(n-M+1/2)) and
    L0 = sum n (n^a_n + n^b_n) + (1/4 - M^2)/2.  The fourth family's
    alternating parity signs are absorbed into the operator phases and
    leave identical matrices.

The massless case with mu = 0 owns a genuine zero frequency and is
realized through the integer-spaced construction at M = 0.

Truncation effects are confined to states occupying the top retained
mode; all identities are checked on the admissible complement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np

from . import modes, reps
from .errors import ValidationError

__all__ = [
    "MIN_CUTOFF", "MAX_CUTOFF",
    "TruncatedFock", "ChargeOperators", "VacuumSector",
    "build_fock", "car_audit", "commutator_check", "vacuum_sector",
]

MIN_CUTOFF = 3
MAX_CUTOFF = 6

_INTEGER = (modes.DIRICHLET_III, modes.DIRICHLET_IV)
_FAMILIES = (modes.MASSLESS_BETA,) + _INTEGER


@lru_cache(maxsize=1)
def _popcount_table():
    idx = np.arange(1 << 16)
    table = np.zeros(1 << 16, dtype=np.int64)
    for shift in range(16):
        table += (idx >> shift) & 1
    table.setflags(write=False)
    return table


def _parity(values):
    return _popcount_table()[values] & 1


@dataclass(frozen=True)
class TruncatedFock:
    """Finite fermionic state space with one qubit per retained mode.

    ``labels`` orders the qubit slots; basis state s occupies slot q
    exactly when bit q of s is set, and the sign strings of the graded
    construction run over the lower slots.  The static-mode variant of
    the integer-spaced families carries 2N-1 slots, the massless
    generic case 2N.
    """

    family: str
    cutoff: int
    labels: Tuple[Tuple[str, int], ...]
    mu: Optional[float] = None
    M: Optional[float] = None

    @property
    def qubits(self) -> int:
        return len(self.labels)

    @property
    def dimension(self) -> int:
        return 1 << self.qubits

    def slot(self, kind, index) -> int:
        try:
            return self.labels.index((kind, int(index)))
        except ValueError:
            raise ValidationError(
                f"no mode operator {kind}_{index} below cutoff "
                f"{self.cutoff}") from None

    def _monomial(self, ops):
        """Matrix of a product of mode operators, rightmost acting first.

        ``ops`` is a sequence of (kind, index, lower) triples in the
        written operator order.
        """
        dim = self.dimension
        cols = np.arange(dim)
        state = cols.copy()
        amp = np.ones(dim)
        for kind, index, lower in reversed(list(ops)):
            q = self.slot(kind, index)
            mask = 1 << q
            keep = (state & mask != 0) if lower else (state & mask == 0)
            cols, state, amp = cols[keep], state[keep], amp[keep]
            amp = amp * np.where(_parity(state & (mask - 1)), -1.0, 1.0)
            state = state ^ mask
        mat = np.zeros((dim, dim))
        mat[state, cols] = amp
        return mat

    def lowering(self, kind, index):
        return self._monomial([(kind, index, True)])

    def raising(self, kind, index):
        return self._monomial([(kind, index, False)])

    def number(self, kind, index):
        q = self.slot(kind, index)
        occ = (np.arange(self.dimension) >> q) & 1
        return np.diag(occ.astype(float))

    def vacuum(self):
        vec = np.zeros(self.dimension, dtype=np.complex128)
        vec[0] = 1.0
        return vec

    def occupations(self, basis_index):
        s = int(basis_index)
        return tuple(lbl for q, lbl in enumerate(self.labels)
                     if s >> q & 1)

    def admissible_indices(self):
        """Basis states leaving every top retained mode unoccupied."""
        top = 0
        for kind, index in self.labels:
            if index == self.cutoff - 1:
                top |= 1 << self.slot(kind, index)
        s = np.arange(self.dimension)
        return s[(s & top) == 0]


@dataclass(frozen=True)
class ChargeOperators:
    """The three conserved charges realized on a truncated Fock space.

    ``constant`` is the identity coefficient inside the diagonal
    charge; ``mixing`` is the coefficient of the particle-pair term
    coupling the towers across zero frequency, the witness that a
    non-invariant boundary condition mixes creation and annihilation
    sectors.
    """

    space: TruncatedFock
    raising: np.ndarray
    lowering: np.ndarray
    weight: np.ndarray
    constant: float
    mixing: complex


@dataclass(frozen=True)
class VacuumSector:
    weights: Tuple[float, ...]
    degeneracy: int
    label: Optional[reps.UIRLabel]


def _massless_charges(space: TruncatedFock, mu):
    n_cut = space.cutoff
    dim = space.dimension
    lam = 0.5 * (mu - 0.5) ** 2
    s = np.arange(dim)
    diag = np.full(dim, lam)
    for j in range(n_cut):
        occ_a = (s >> space.slot("a", j)) & 1
        occ_b = (s >> space.slot("b", j)) & 1
        diag = diag + (j + mu) * occ_a + (j + 1.0 - mu) * occ_b
    weight = np.diag(diag.astype(np.complex128))
    raising = np.zeros((dim, dim), dtype=np.complex128)
    for j in range(n_cut - 1):
        phase = 1j * (-1.0) ** (j + 1)
        hop_a = space._monomial([("a", j + 1, False), ("a", j, True)])
        hop_b = space._monomial([("b", j + 1, False), ("b", j, True)])
        raising += phase * ((j + mu + 0.5) * hop_a + (j + 1.5 - mu) * hop_b)
    mixing = 1j * (mu - 0.5)
    raising += mixing * space._monomial([("a", 0, False), ("b", 0, False)])
    lowering = -raising.conj().T
    return raising, lowering, weight, lam, mixing


def _integer_charges(space: TruncatedFock, M):
    n_cut = space.cutoff
    dim = space.dimension
    lam = 0.5 * (0.25 - M * M)
    s = np.arange(dim)
    diag = np.full(dim, lam)
    for n in range(1, n_cut):
        occ = (((s >> space.slot("a", n)) & 1)
               + ((s >> space.slot("b", n)) & 1))
        diag = diag + float(n) * occ
    weight = np.diag(diag.astype(np.complex128))
    raising = np.zeros((dim, dim), dtype=np.complex128)
    for n in range(1, n_cut - 1):
        c_n = math.sqrt((n + M + 0.5) * (n - M + 0.5))
        raising += -1j * c_n * (
            space._monomial([("a", n + 1, False), ("a", n, True)])
            + space._monomial([("b", n + 1, False), ("b", n, True)]))
    c0 = math.sqrt(0.25 - M * M)
    raising += 1j * c0 * (
        space._monomial([("a", 0, False), ("b", 1, False)])
        - space._monomial([("a", 1, False), ("a", 0, True)]))
    lowering = -raising.conj().T
    return raising, lowering, weight, lam, 1j * c0


def build_fock(family, cutoff, mu=None, M=None) -> ChargeOperators:
    """Assemble the truncated Fock space and charge matrices of a family.

    ``mu`` parametrizes the massless diagonal family as the tower base:
    the retained positive-tower frequencies are j + mu.  Passing the
    representative offset of a boundary condition (in (-1/2, 1/2])
    reproduces that convention's weight constant; passing the lowest
    positive frequency (in (0, 1)) reproduces the physical vacuum
    weight.  ``mu = 0`` owns a zero frequency and is built through the
    static-mode realization.  Integer-spaced families take ``M``.
    """
    cutoff = int(cutoff)
    if not MIN_CUTOFF <= cutoff <= MAX_CUTOFF:
        raise ValidationError(
            f"cutoff must lie in {MIN_CUTOFF}..{MAX_CUTOFF}, got {cutoff}")
    if family not in _FAMILIES:
        raise ValidationError(
            f"no truncated quantization for family {family!r}")
    if family == modes.MASSLESS_BETA:
        if mu is None:
            raise ValidationError("the massless family needs mu")
        if M is not None:
            raise ValidationError("mu and M are mutually exclusive")
        mu = float(mu)
        if not -1.0 < mu < 1.0:
            raise ValidationError(f"mu must lie in (-1, 1), got {mu}")
        if abs(mu) < 1e-12:
            space = TruncatedFock(family=family, cutoff=cutoff,
                                  labels=_integer_labels(cutoff),
                                  mu=0.0, M=None)
            rai, low, wgt, lam, mix = _integer_charges(space, 0.0)
            return ChargeOperators(space=space, raising=rai, lowering=low,
                                   weight=wgt, constant=lam, mixing=mix)
        labels = tuple([("a", j) for j in range(cutoff)]
                       + [("b", j) for j in range(cutoff)])
        space = TruncatedFock(family=family, cutoff=cutoff, labels=labels,
                              mu=mu, M=None)
        rai, low, wgt, lam, mix = _massless_charges(space, mu)
        return ChargeOperators(space=space, raising=rai, lowering=low,
                               weight=wgt, constant=lam, mixing=mix)
    if M is None:
        raise ValidationError("integer-spaced families need M")
    if mu is not None:
        raise ValidationError("mu and M are mutually exclusive")
    M = float(M)
    if not 0.0 <= M < 0.5:
        raise ValidationError(f"static-mode families need 0 <= M < 1/2, "
                              f"got {M}")
    space = TruncatedFock(family=family, cutoff=cutoff,
                          labels=_integer_labels(cutoff), M=M)
    rai, low, wgt, lam, mix = _integer_charges(space, M)
    return ChargeOperators(space=space, raising=rai, lowering=low,
                           weight=wgt, constant=lam, mixing=mix)


def _integer_labels(cutoff):
    return tuple([("a", n) for n in range(cutoff)]
                 + [("b", n) for n in range(1, cutoff)])


def _bit_map(space: TruncatedFock, qubit: int, lower: bool):
    # a single ladder monomial sends each basis state to at most one
    # signed basis state; (target, amplitude) arrays capture it exactly
    table = _popcount_table()
    mask = 1 << qubit
    dim = space.dimension
    target = np.arange(dim)
    amp = np.zeros(dim)
    for state in range(dim):
        occupied = bool(state & mask)
        if occupied != lower:
            continue
        amp[state] = -1.0 if (table[(state & (mask - 1)) & 0xFFFF]
                              + table[(state & (mask - 1)) >> 16]) & 1 else 1.0
        target[state] = state ^ mask
    return target, amp


def car_audit(space: TruncatedFock) -> float:
    """Largest deviation from the canonical anticommutation relations.

    Scans every pair of ladder monomials without forming matrix
    products: both orderings are composed as signed single-bit maps and
    their sum is compared entrywise against delta_{pq} or zero.  The
    construction is sign-exact, so the return value is literally 0.0.
    """
    qubits = space.qubits
    lowers = [_bit_map(space, q, True) for q in range(qubits)]
    raises_ = [_bit_map(space, q, False) for q in range(qubits)]
    dim = space.dimension

    def compose(f, g):
        tgt_g, amp_g = g
        tgt_f, amp_f = f
        return tgt_f[tgt_g], amp_g * amp_f[tgt_g]

    worst = 0.0
    for p in range(qubits):
        for q in range(qubits):
            for x, y, want in ((lowers[p], lowers[q], 0.0),
                               (raises_[p], raises_[q], 0.0),
                               (lowers[p], raises_[q],
                                1.0 if p == q else 0.0)):
                t1, a1 = compose(x, y)
                t2, a2 = compose(y, x)
                for s in range(dim):
                    entries = {}
                    if a1[s] != 0.0:
                        entries[t1[s]] = entries.get(t1[s], 0.0) + a1[s]
                    if a2[s] != 0.0:
                        entries[t2[s]] = entries.get(t2[s], 0.0) + a2[s]
                    entries[s] = entries.get(s, 0.0) - want
                    dev = max((abs(v) for v in entries.values()), default=0.0)
                    if dev > worst:
                        worst = dev
    return worst


def commutator_check(ops: ChargeOperators, indices=None) -> float:
    """Largest norm of ([L+, L-] - 2 L0)|s> over the given basis states.

    Defaults to the admissible subspace, where the value must sit at
    rounding level; truncation-edge states report a genuine deviation
    and are deliberately not asserted against.
    """
    if indices is None:
        indices = ops.space.admissible_indices()
    indices = np.asarray(indices, dtype=np.intp)
    defect = (ops.raising @ ops.lowering - ops.lowering @ ops.raising
              - 2.0 * ops.weight)
    cols = defect[:, indices]
    return float(np.max(np.linalg.norm(cols, axis=0))) if cols.size else 0.0


def vacuum_sector(ops: ChargeOperators) -> VacuumSector:
    """States annihilated by the lowering charge at the vacuum weight.

    Returns their common weight(s), the count, and the lowest-weight
    series label they generate.  A weight-zero invariant vacuum (the
    splitting boundary) carries no discrete label and reports None.
    """
    diag = np.real(np.diag(ops.weight))
    lam0 = diag[0]
    sector = np.flatnonzero(np.abs(diag - lam0) <= 1e-9)
    block = ops.lowering[:, sector]
    rank = int(np.linalg.matrix_rank(block, tol=1e-10))
    degeneracy = len(sector) - rank
    if degeneracy < 1:
        raise ValidationError("the canonical vacuum failed annihilation")
    label = None
    if lam0 > 1e-12:
        label = reps.UIRLabel(reps.DISCRETE_PLUS, lam0)
    return VacuumSector(weights=(float(lam0),) * degeneracy,
                        degeneracy=degeneracy, label=label)
