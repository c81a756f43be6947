import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ads2dirac import fock, reps
from ads2dirac.errors import ValidationError


def _anticommutator(x, y):
    return x @ y + y @ x


def test_canonical_anticommutation_exact():
    sp = fock.build_fock("beta", 3, mu=0.25).space
    eye = np.eye(sp.dimension)
    ops = [sp.lowering(kind, idx) for kind, idx in sp.labels]
    for i, low_i in enumerate(ops):
        for j, low_j in enumerate(ops):
            want = eye if i == j else np.zeros_like(eye)
            assert np.array_equal(_anticommutator(low_i, low_j.T), want)
            assert np.max(np.abs(_anticommutator(low_i, low_j))) == 0.0


def test_car_audit_reports_literal_zero():
    for ops in (fock.build_fock("beta", 4, mu=0.25),
                fock.build_fock("dirichlet3", 4, M=0.25)):
        assert fock.car_audit(ops.space) == 0.0


def test_vacuum_annihilated_by_every_lowering():
    sp = fock.build_fock("dirichlet3", 4, M=0.25).space
    vac = sp.vacuum()
    for kind, idx in sp.labels:
        assert np.max(np.abs(sp.lowering(kind, idx) @ vac)) == 0.0


def test_number_operator_consistency():
    sp = fock.build_fock("beta", 3, mu=0.4).space
    for kind, idx in sp.labels:
        low = sp.lowering(kind, idx)
        assert np.array_equal(sp.number(kind, idx), low.T @ low)


def test_slot_lookup_and_errors():
    sp = fock.build_fock("dirichlet3", 4, M=0.1).space
    assert sp.qubits == 7
    assert sp.slot("a", 0) == 0
    with pytest.raises(ValidationError):
        sp.slot("b", 0)
    with pytest.raises(ValidationError):
        sp.slot("a", 4)


def test_admissible_indices_exclude_top_modes():
    sp = fock.build_fock("beta", 3, mu=0.25).space
    idx = sp.admissible_indices()
    assert len(idx) == sp.dimension // 4
    top_a, top_b = sp.slot("a", 2), sp.slot("b", 2)
    for s in idx:
        assert not (s >> top_a) & 1
        assert not (s >> top_b) & 1


def test_weight_charge_is_diagonal():
    ops = fock.build_fock("beta", 4, mu=0.3)
    off = ops.weight - np.diag(np.diag(ops.weight))
    assert np.max(np.abs(off)) == 0.0


def test_lowering_matches_adjoint_of_raising():
    # the printed lowering sum, assembled independently, equals -L+^dagger
    ops = fock.build_fock("beta", 4, mu=0.25)
    sp = ops.space
    mu = 0.25
    built = np.zeros_like(ops.lowering)
    for j in range(sp.cutoff - 1):
        phase = 1j * (-1.0) ** (j + 1)
        built += phase * (
            (j + mu + 0.5) * sp.raising("a", j) @ sp.lowering("a", j + 1)
            + (j + 1.5 - mu) * sp.raising("b", j) @ sp.lowering("b", j + 1))
    built += -1j * (mu - 0.5) * sp.lowering("a", 0) @ sp.lowering("b", 0)
    assert np.max(np.abs(built - ops.lowering)) < 1e-12
    assert np.max(np.abs(ops.raising.conj().T + ops.lowering)) == 0.0


def test_integer_lowering_matches_adjoint_of_raising():
    M = 0.25
    ops = fock.build_fock("dirichlet3", 4, M=M)
    sp = ops.space
    built = np.zeros_like(ops.lowering)
    for n in range(1, sp.cutoff - 1):
        c_n = math.sqrt((n + M + 0.5) * (n - M + 0.5))
        built += -1j * c_n * (
            sp.raising("a", n) @ sp.lowering("a", n + 1)
            + sp.raising("b", n) @ sp.lowering("b", n + 1))
    c0 = math.sqrt(0.25 - M * M)
    built += 1j * c0 * (sp.lowering("b", 1) @ sp.lowering("a", 0)
                        - sp.raising("a", 0) @ sp.lowering("a", 1))
    assert np.max(np.abs(built - ops.lowering)) < 1e-12


def test_lowering_annihilates_vacuum_exactly():
    for ops in (fock.build_fock("beta", 5, mu=0.25),
                fock.build_fock("dirichlet3", 5, M=0.25)):
        assert np.max(np.abs(ops.lowering @ ops.space.vacuum())) == 0.0


@pytest.mark.parametrize("family,kw", [
    ("beta", dict(mu=0.25)),
    ("beta", dict(mu=-0.25)),
    ("dirichlet3", dict(M=0.25)),
    ("dirichlet4", dict(M=0.37)),
    ("beta", dict(mu=0.0)),
])
def test_commutator_identity_on_admissible_subspace(family, kw):
    ops = fock.build_fock(family, 5, **kw)
    assert fock.commutator_check(ops) <= 1e-12


def test_commutator_on_named_states():
    ops = fock.build_fock("beta", 5, mu=0.25)
    sp = ops.space
    vac_dev = fock.commutator_check(ops, indices=[0])
    assert vac_dev == 0.0
    pair = (1 << sp.slot("a", 1)) | (1 << sp.slot("b", 0))
    assert fock.commutator_check(ops, indices=[pair]) <= 1e-12
    edge = 1 << sp.slot("a", sp.cutoff - 1)
    assert fock.commutator_check(ops, indices=[edge]) > 1.0


@settings(deadline=None, max_examples=10)
@given(st.floats(min_value=-0.9, max_value=0.9).filter(
    lambda v: abs(v) > 1e-6))
def test_commutator_identity_for_generic_mu(mu):
    ops = fock.build_fock("beta", 3, mu=mu)
    assert fock.commutator_check(ops) <= 1e-12


def test_weight_spectrum_of_the_vacuum_module():
    # repeated raising walks the weights up in integer steps from lambda
    for ops, lam in ((fock.build_fock("beta", 5, mu=0.25), 0.03125),
                     (fock.build_fock("dirichlet3", 5, M=0.25), 0.09375)):
        psi = ops.space.vacuum()
        for k in range(ops.space.cutoff - 1):
            nrm = np.linalg.norm(psi)
            assert nrm > 0.0
            got = np.vdot(psi, ops.weight @ psi).real / nrm ** 2
            assert got == pytest.approx(lam + k, abs=1e-10)
            psi = ops.raising @ psi


@pytest.mark.parametrize("family,kw,lam,deg", [
    ("beta", dict(mu=0.25), 0.03125, 1),
    ("beta", dict(mu=-0.25), 0.28125, 1),
    ("dirichlet3", dict(M=0.25), 0.09375, 2),
    ("dirichlet3", dict(M=0.0), 0.125, 2),
    ("dirichlet4", dict(M=0.25), 0.09375, 2),
    ("beta", dict(mu=0.0), 0.125, 2),
])
def test_vacuum_sector_weights_and_degeneracy(family, kw, lam, deg):
    sector = fock.vacuum_sector(fock.build_fock(family, 5, **kw))
    assert sector.degeneracy == deg
    assert len(sector.weights) == deg
    for w in sector.weights:
        assert w == pytest.approx(lam, abs=1e-12)
    assert sector.label.series == reps.DISCRETE_PLUS
    assert sector.label.weight == pytest.approx(lam, abs=1e-12)


def test_invariant_boundary_condition_has_invariant_vacuum():
    # mu = 1/2 kills the tower-mixing pair term; the vacuum then spans
    # the trivial summand and carries no discrete label
    ops = fock.build_fock("beta", 4, mu=0.5)
    assert ops.mixing == 0.0
    assert np.max(np.abs(ops.raising @ ops.space.vacuum())) == 0.0
    sector = fock.vacuum_sector(ops)
    assert sector.label is None
    assert sector.weights == (0.0,)


def test_mixing_witness_values():
    assert fock.build_fock("beta", 3, mu=0.25).mixing == 1j * (0.25 - 0.5)
    got = fock.build_fock("dirichlet3", 3, M=0.25).mixing
    assert got == pytest.approx(1j * math.sqrt(0.25 - 0.0625))


def test_mu_zero_routes_to_the_static_mode_realization():
    ops = fock.build_fock("beta", 4, mu=0.0)
    assert ops.space.qubits == 7
    ref = fock.build_fock("dirichlet3", 4, M=0.0)
    assert np.array_equal(ops.raising, ref.raising)
    assert np.array_equal(ops.weight, ref.weight)


def test_build_fock_validation():
    with pytest.raises(ValidationError):
        fock.build_fock("beta", 2, mu=0.25)
    with pytest.raises(ValidationError):
        fock.build_fock("beta", 7, mu=0.25)
    with pytest.raises(ValidationError):
        fock.build_fock("beta", 4)
    with pytest.raises(ValidationError):
        fock.build_fock("beta", 4, mu=0.25, M=0.1)
    with pytest.raises(ValidationError):
        fock.build_fock("beta", 4, mu=1.5)
    with pytest.raises(ValidationError):
        fock.build_fock("dirichlet3", 4)
    with pytest.raises(ValidationError):
        fock.build_fock("dirichlet3", 4, M=0.75)
    with pytest.raises(ValidationError):
        fock.build_fock("dirichlet1", 4, M=0.25)
