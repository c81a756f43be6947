"""Self-adjoint boundary conditions for the strip Dirac operator.

A unitary 2x2 matrix U selects an extension through the endpoint relation

    (I - U) q = i (I + U) p,    q = (F2(+pi/2), F2(-pi/2)),
                                p = (F1(+pi/2), -F1(-pi/2)),

imposed on the wall limits F1, F2 of the weighted solution components.
This module builds and classifies such conditions: deficiency indices of
the minimal operator, invariance of a condition under the frequency-shift
maps, eigenfrequency spectra (closed form and numeric scan), kernel
coefficients at an eigenfrequency, and a verifier for the wall expansions
of the general solutions.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from . import modes, quad, specfun
from .errors import ConvergenceError, PoleError, ValidationError

__all__ = [
    "BoundaryCondition",
    "boundary_condition",
    "named_condition",
    "diagonal_condition",
    "boundary_residual",
    "shifted_boundary_data",
    "InvarianceFailure",
    "InvarianceReport",
    "invariance_test",
    "spectrum",
    "kernel_coefficients",
    "EndpointVerdict",
    "StripCheck",
    "DeficiencyReport",
    "deficiency_indices",
    "AsymptoticCheck",
    "AsymptoticReport",
    "asymptotic_verifier",
]

_UNITARY_TOL = 1e-12
_SCAN_STEP = 0.05
_ROOT_MERGE = 1e-8
_PROBE_FREQUENCIES = (0.3, 0.7, 1.1)
_EPSILONS = (1e-3, 1e-4, 1e-5)

_DIRICHLET_MATRICES = {
    modes.DIRICHLET_I: np.diag([-1.0 + 0.0j, 1.0 + 0.0j]),
    modes.DIRICHLET_II: np.diag([1.0 + 0.0j, -1.0 + 0.0j]),
    modes.DIRICHLET_III: np.eye(2, dtype=complex),
    modes.DIRICHLET_IV: -np.eye(2, dtype=complex),
}


@dataclass(frozen=True, eq=False)
class BoundaryCondition:
    """Unitary endpoint matrix plus an optional family tag."""

    matrix: np.ndarray
    tag: str | None = None

    def __post_init__(self):
        U = np.array(self.matrix, dtype=complex)
        if U.shape != (2, 2):
            raise ValidationError("boundary matrix must be 2x2")
        defect = np.max(np.abs(U.conj().T @ U - np.eye(2)))
        if defect > _UNITARY_TOL:
            raise ValidationError(
                f"boundary matrix unitary defect {defect:.3e} exceeds 1e-12")
        U.setflags(write=False)
        object.__setattr__(self, "matrix", U)

    @property
    def is_diagonal(self):
        return max(abs(self.matrix[0, 1]), abs(self.matrix[1, 0])) <= _UNITARY_TOL

    def betas(self):
        """Half phases (beta_plus, beta_minus) of a diagonal matrix, in [0, pi)."""
        if not self.is_diagonal:
            raise ValidationError("betas are defined for diagonal matrices only")
        pair = []
        for entry in (self.matrix[0, 0], self.matrix[1, 1]):
            pair.append((0.5 * cmath.phase(entry)) % math.pi)
        return tuple(pair)


def boundary_condition(matrix):
    """Wrap a unitary matrix, snapping to the four named conditions.

    Matrices within 1e-12 of a named matrix are replaced by it so that a
    tag always denotes its exact matrix; other diagonal matrices get the
    generic diagonal tag.
    """
    U = np.array(matrix, dtype=complex)
    if U.shape != (2, 2):
        raise ValidationError("boundary matrix must be 2x2")
    for tag, ref in _DIRICHLET_MATRICES.items():
        if np.max(np.abs(U - ref)) <= _UNITARY_TOL:
            return BoundaryCondition(ref.copy(), tag)
    bc = BoundaryCondition(U)
    if bc.is_diagonal:
        return BoundaryCondition(bc.matrix, modes.MASSLESS_BETA)
    return bc


def named_condition(tag):
    """One of the four distinguished conditions by tag."""
    if tag not in _DIRICHLET_MATRICES:
        raise ValidationError(f"unknown boundary condition tag {tag!r}")
    return BoundaryCondition(_DIRICHLET_MATRICES[tag].copy(), tag)


def diagonal_condition(beta_plus, beta_minus):
    """Condition with matrix diag(e^{2i beta_plus}, e^{2i beta_minus})."""
    U = np.diag([cmath.exp(2j * float(beta_plus)),
                 cmath.exp(2j * float(beta_minus))])
    return boundary_condition(U)


def boundary_residual(bc, data):
    """(I - U) q - i (I + U) p for the endpoint data of one solution.

    Vanishes exactly when the solution lies in the domain selected by U.
    """
    U = bc.matrix
    q = np.array([data.plus2, data.minus2], dtype=complex)
    p = np.array([data.plus1, -data.minus1], dtype=complex)
    eye = np.eye(2)
    return (eye - U) @ q - 1j * (eye + U) @ p


def shifted_boundary_data(M, omega, shift, data):
    """Endpoint data of the frequency-shift image of a solution.

    The raising (+1) and lowering (-1) maps send omega to omega +- 1 and
    act on each wall limit by a scalar multiplier; the component-mixing
    part of the map carries a cosine factor that dies at the walls.
    """
    if shift not in (1, -1):
        raise ValidationError("shift must be +1 or -1")
    a = 0.5 + shift * complex(omega)
    m = float(M)
    return modes.BoundaryData(
        plus1=-(m + a) * data.plus1,
        plus2=(m - a) * data.plus2,
        minus1=-(m - a) * data.minus1,
        minus2=(m + a) * data.minus2,
    )


@dataclass(frozen=True)
class InvarianceFailure:
    omega: float
    shift: int
    eigenvalue: complex
    residual_norm: float


@dataclass(frozen=True)
class InvarianceReport:
    """Certificate for preservation of a boundary condition by the shifts."""

    M: float
    invariant: bool
    failures: tuple
    tolerance: float

    def __bool__(self):
        return self.invariant


def invariance_test(bc, M, tolerance=1e-9):
    """Decide whether the U-condition survives both frequency shifts.

    Probes come from the eigenpairs (lam, v) of U: the endpoint data with
    p = (1 - lam) v and q = i (1 + lam) v satisfy the relation for any
    frequency, so the condition is preserved iff every shifted probe still
    has zero residual.
    """
    m = float(M)
    if not 0.0 <= m < 0.5:
        raise ValidationError("invariance test applies for 0 <= M < 1/2")
    eigvals, eigvecs = np.linalg.eig(bc.matrix)
    failures = []
    for omega in _PROBE_FREQUENCIES:
        for shift in (1, -1):
            for lam, vec in zip(eigvals, eigvecs.T):
                p = (1.0 - lam) * vec
                q = 1j * (1.0 + lam) * vec
                data = modes.BoundaryData(plus1=p[0], plus2=q[0],
                                          minus1=-p[1], minus2=q[1])
                moved = shifted_boundary_data(m, omega, shift, data)
                scale = max(float(np.max(np.abs(moved.vector()))), 1.0)
                norm = float(np.linalg.norm(boundary_residual(bc, moved)))
                if norm > tolerance * scale:
                    failures.append(InvarianceFailure(
                        omega=omega, shift=shift,
                        eigenvalue=complex(lam), residual_norm=norm))
    return InvarianceReport(M=m, invariant=not failures,
                            failures=tuple(failures), tolerance=tolerance)


# ---------------------------------------------------------------------------
# spectra


def _condition_matrix(bc, M, omega):
    """2x2 constraint matrix; columns are the two basis solutions.

    For diagonal U the two constraint rows are rescaled by unimodular
    factors so that they are real at real frequencies (the basis endpoint
    data are real there); for general U the rows are the raw residuals.
    """
    diagonal = bc.is_diagonal
    if diagonal:
        beta_plus, beta_minus = bc.betas()
    cols = []
    for coeffs in ((1.0, 0.0), (0.0, 1.0)):
        sol = modes.general_solution(M, omega, *coeffs)
        data = modes.boundary_data(sol)
        if diagonal:
            cols.append([
                math.sin(beta_plus) * data.plus2
                + math.cos(beta_plus) * data.plus1,
                math.sin(beta_minus) * data.minus2
                - math.cos(beta_minus) * data.minus1,
            ])
        else:
            cols.append(list(boundary_residual(bc, data)))
    return np.array(cols, dtype=complex).T


def _kernel_dimension(mat):
    s = np.linalg.svd(mat, compute_uv=False)
    return int(np.sum(s <= 1e-8 * max(1.0, float(s[0]))))


def _merge_roots(roots):
    out = []
    for r in sorted(roots):
        if out and abs(r - out[-1]) <= _ROOT_MERGE:
            continue
        out.append(r)
    return out


def _scan_grid(lo, hi):
    # one step of padding each side keeps window-edge roots inside a full
    # bracket; results are clipped back to the window afterwards
    n = max(int(math.ceil((hi - lo) / _SCAN_STEP)), 1) + 2
    return np.linspace(lo - _SCAN_STEP, hi + _SCAN_STEP, n + 1)


def _in_window(roots, lo, hi):
    return [r for r in roots if lo - 1e-12 <= r <= hi + 1e-12]


def _scan_diagonal(bc, M, lo, hi):
    def det(w):
        mat = _condition_matrix(bc, M, w)
        return float(np.real(mat[0, 0] * mat[1, 1] - mat[0, 1] * mat[1, 0]))

    grid = _scan_grid(lo, hi)
    vals = [det(w) for w in grid]
    roots = []
    for a, b, fa, fb in zip(grid, grid[1:], vals, vals[1:]):
        if fa == 0.0:
            roots.append(float(a))
        elif fa * fb < 0.0:
            roots.append(float(brentq(det, a, b, xtol=1e-13, rtol=8.9e-16)))
    if vals and vals[-1] == 0.0:
        roots.append(float(grid[-1]))
    # omega = 0 pairs with a decoupled solution basis; sign changes through
    # the origin are re-adjudicated against the exact determinant there
    roots = [r for r in _merge_roots(roots) if abs(r) > 1e-6]
    if lo - 1e-12 <= 0.0 <= hi + 1e-12:
        mat0 = _condition_matrix(bc, M, 0.0)
        scale = max(1.0, float(np.max(np.abs(mat0)))) ** 2
        det0 = mat0[0, 0] * mat0[1, 1] - mat0[0, 1] * mat0[1, 0]
        if abs(det0) <= 1e-9 * scale:
            roots.append(0.0)
    return _in_window(roots, lo, hi)


def _scan_general(bc, M, lo, hi):
    # exploratory: minima of the smallest singular value of the residual
    # matrix; no sign information is available off the diagonal family
    def smallest(w):
        s = np.linalg.svd(_condition_matrix(bc, M, w), compute_uv=False)
        return float(s[-1])

    grid = _scan_grid(lo, hi)
    vals = np.array([smallest(w) for w in grid])
    scale = max(float(np.median(vals)), 1e-3)
    roots = []
    for i in range(1, len(grid) - 1):
        if vals[i] <= vals[i - 1] and vals[i] <= vals[i + 1]:
            res = minimize_scalar(smallest,
                                  bounds=(float(grid[i - 1]), float(grid[i + 1])),
                                  method="bounded",
                                  options={"xatol": 1e-12})
            if res.fun <= 1e-7 * scale:
                roots.append(float(res.x))
    return _in_window(_merge_roots(roots), lo, hi)


def _with_multiplicity(bc, M, roots):
    out = []
    for r in roots:
        dim = _kernel_dimension(_condition_matrix(bc, M, r))
        out.extend([r] * max(dim, 1))
    return out


def _ladder(bases, lo, hi):
    """Frequencies +-(base + n), n >= 0, clipped to [lo, hi]."""
    out = []
    for base in bases:
        n_max = int(math.ceil(max(abs(lo), abs(hi)) + abs(base))) + 2
        for n in range(n_max + 1):
            for w in (base + n, -(base + n)):
                if lo - 1e-12 <= w <= hi + 1e-12:
                    out.append(float(w))
    return sorted(out)


def _integer_ladder(lo, hi):
    return [float(n) for n in range(int(math.ceil(lo - 1e-12)),
                                    int(math.floor(hi + 1e-12)) + 1)]


def _massless_ladder(beta, lo, hi):
    # omega_j = j + 1 - beta, j running over the integers
    out = []
    j = int(math.floor(lo + beta)) - 2
    while True:
        w = j + 1.0 - beta
        if w > hi + 1e-12:
            return out
        if w >= lo - 1e-12:
            out.append(w)
        j += 1


def spectrum(bc, M, window, method="auto"):
    """Eigenfrequencies of the extension in a window, with multiplicity.

    method "auto" uses the closed-form ladders and requires a condition
    that is preserved by the frequency shifts (for M >= 1/2 only the first
    named condition remains self-adjoint).  method "scan" locates zeros of
    the boundary determinant on a 0.05 grid, refines them by bisection,
    and needs M < 1/2; it works for any unitary matrix, though conditions
    that fail the invariance test mix frequency sectors and the resulting
    set is exploratory.
    """
    m = float(M)
    if m < 0.0:
        raise ValidationError("mass must be nonnegative")
    lo, hi = (float(window[0]), float(window[1]))
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise ValidationError("window must be a finite increasing pair")
    if method == "scan":
        if m >= 0.5:
            raise ValidationError("numeric scan requires M < 1/2")
        if bc.is_diagonal:
            roots = _scan_diagonal(bc, m, lo, hi)
        else:
            roots = _scan_general(bc, m, lo, hi)
        return sorted(_with_multiplicity(bc, m, _merge_roots(roots)))
    if method != "auto":
        raise ValidationError(f"unknown method {method!r}")

    tag = bc.tag or _detect_tag(bc.matrix)
    if m >= 0.5:
        if tag != modes.DIRICHLET_I:
            raise ValidationError(
                "only the first named condition is self-adjoint for M >= 1/2")
        return _ladder((0.5 + m,), lo, hi)
    if m == 0.0:
        if not bc.is_diagonal:
            raise ValidationError(
                "massless closed forms require a diagonal matrix; use scan")
        beta_plus, beta_minus = bc.betas()
        return _massless_ladder((beta_plus + beta_minus) / math.pi, lo, hi)
    if tag == modes.DIRICHLET_I:
        return _ladder((0.5 + m,), lo, hi)
    if tag == modes.DIRICHLET_II:
        return _ladder((0.5 - m,), lo, hi)
    if tag in (modes.DIRICHLET_III, modes.DIRICHLET_IV):
        return _integer_ladder(lo, hi)
    raise ValidationError(
        "no closed form: condition is not shift-invariant at this mass; "
        "use method='scan'")


def _detect_tag(U):
    for tag, ref in _DIRICHLET_MATRICES.items():
        if np.max(np.abs(U - ref)) <= _UNITARY_TOL:
            return tag
    return None


def kernel_coefficients(bc, M, omega):
    """Basis coefficients (c1, c2) of the solution at an eigenfrequency.

    The smallest right singular vector of the constraint matrix, phase
    normalized so its largest entry is real positive.  Raises when omega
    is not close to an eigenfrequency.
    """
    m = float(M)
    if not 0.0 <= m < 0.5:
        raise ValidationError("kernel extraction requires 0 <= M < 1/2")
    mat = _condition_matrix(bc, m, omega)
    _, s, vh = np.linalg.svd(mat)
    if s[-1] > 1e-6 * max(1.0, float(s[0])):
        raise ValidationError(
            f"omega={omega} is not an eigenfrequency of this condition")
    vec = vh[-1].conj()
    pivot = vec[int(np.argmax(np.abs(vec)))]
    vec = vec * (abs(pivot) / pivot)
    return complex(vec[0]), complex(vec[1])


# ---------------------------------------------------------------------------
# deficiency indices


@dataclass(frozen=True)
class EndpointVerdict:
    omega: complex
    basis: int
    endpoint: str
    exponent: float
    log_factor: bool
    integrable: bool


@dataclass(frozen=True)
class StripCheck:
    omega: complex
    basis: int
    diverged: bool


@dataclass(frozen=True)
class DeficiencyReport:
    M: float
    n_plus: int
    n_minus: int
    verdicts: tuple
    strip_checks: tuple


_FIT_GRID = np.geomspace(1e-5, 1e-3, 12)


def deficiency_indices(M):
    """Dimensions of the square-integrable solution spaces at omega = +-i.

    Each basis solution is graded per wall by the fitted exponent of its
    squared amplitude; integrable means exponent > -0.995 (the margin
    keeps the fit honest, at the price of misreading masses within about
    0.0025 of the 1/2 transition).  A full-strip quadrature of each
    amplitude is recorded as corroboration.  Any divergence at the upper
    wall is carried by the second basis direction alone, so when that
    solution fails the count reduces to whether the first stays integrable.
    """
    m = float(M)
    if m < 0.0:
        raise ValidationError("mass must be nonnegative")
    verdicts = []
    strip_checks = []
    counts = {}
    for sign in (1, -1):
        w = sign * 1j
        flags = {}
        for basis, coeffs in enumerate(((1.0, 0.0), (0.0, 1.0)), start=1):
            sol = modes.general_solution(m, w, *coeffs)
            for endpoint in ("+", "-"):
                fit = quad.endpoint_exponent_fit(sol.spatial, endpoint,
                                                 _FIT_GRID)
                ok = fit.exponent > -0.995
                flags[basis, endpoint] = ok
                verdicts.append(EndpointVerdict(
                    omega=w, basis=basis, endpoint=endpoint,
                    exponent=fit.exponent, log_factor=fit.log_factor,
                    integrable=ok))

            def density(rho, u_plus, u_minus, _sol=sol):
                vals = _sol.spatial(rho, u_plus, u_minus)
                with np.errstate(over="ignore"):
                    return np.sum(np.abs(vals) ** 2, axis=-1)

            # refinement drives abscissas into the wall; for non-integrable
            # amplitudes the evaluation overflows before the level ratios
            # settle, which is equally valid divergence evidence
            try:
                quad.integrate(density, quad.QuadratureSpec(tolerance=1e-8,
                                                            max_levels=5))
                diverged = False
            except (ConvergenceError, OverflowError):
                diverged = True
            strip_checks.append(StripCheck(omega=w, basis=basis,
                                           diverged=diverged))
        if all(flags.values()):
            counts[sign] = 2
        elif flags[1, "+"] and flags[1, "-"]:
            counts[sign] = 1
        else:
            counts[sign] = 0
    return DeficiencyReport(M=m, n_plus=counts[1], n_minus=counts[-1],
                            verdicts=tuple(verdicts),
                            strip_checks=tuple(strip_checks))


# ---------------------------------------------------------------------------
# wall asymptotics


@dataclass(frozen=True)
class AsymptoticCheck:
    endpoint: str
    quantity: str
    epsilon: float
    predicted: complex
    actual: complex
    rel_error: float


@dataclass(frozen=True)
class AsymptoticReport:
    M: float
    omega: float
    c1: complex
    c2: complex
    regime: str
    checks: tuple

    def max_rel_error(self, epsilon=None):
        sel = [c.rel_error for c in self.checks
               if epsilon is None or c.epsilon == epsilon]
        if not sel:
            raise ValidationError("no checks at the requested epsilon")
        return max(sel)


def _connection(M, omega):
    # gamma-quotient coefficients of the z -> 1-z continuation; finite for
    # every non-half-integer M >= 0, unlike the M < 1/2 gated variant
    m, w = float(M), complex(omega)
    rg = specfun.rgamma
    a1 = math.gamma(0.5 + m) ** 2 * rg(0.5 + m + w) * rg(0.5 + m - w)
    a2 = math.gamma(0.5 + m) * math.gamma(-0.5 - m) * rg(w) * rg(-w)
    b1 = math.gamma(1.5 - m) * math.gamma(-m - 0.5) * rg(0.5 - m + w) * rg(0.5 - m - w)
    b2 = math.gamma(1.5 - m) * math.gamma(0.5 + m) * rg(1.0 + w) * rg(1.0 - w)
    return complex(a1), complex(a2), complex(b1), complex(b2)


def _wall_values(sol, eps):
    up = sol.spatial(math.pi / 2 - eps, u_plus=eps / 2,
                     u_minus=math.pi / 2 - eps / 2)
    low = sol.spatial(eps - math.pi / 2, u_plus=math.pi / 2 - eps / 2,
                      u_minus=eps / 2)
    return up, low


def _generic_predictions(m, w, c1, c2):
    a1, a2, b1, b2 = _connection(m, w)
    am1, am2, bm1, bm2 = _connection(-m, w)
    minus1 = (2 * m + 1) * c1 * a1 + 2.0 * w * c2 * b2
    minus2 = 2.0 * w * c1 * bm2 + (2 * m - 1) * c2 * am1
    sub1 = ((2 * m + 1) * c1 * a2 / 2.0 + w * c2 * b1) * 2.0 ** (-m)
    sub2 = (w * c1 * bm1 + (2 * m - 1) * c2 * am2 / 2.0) * 2.0 ** m

    def up1(eps):
        return ((2 * m + 1) * c1 * (eps / 2.0) ** m,
                w * c2 * 2.0 ** m * eps ** (1.0 - m))

    def up2(eps):
        return (w * c1 * 2.0 ** (-m) * eps ** (1.0 + m),
                (2 * m - 1) * c2 * 2.0 ** m * eps ** (-m))

    def low1(eps):
        return (minus1 * (2.0 / eps) ** m, sub1 * eps ** (m + 1.0))

    def low2(eps):
        return (minus2 * (eps / 2.0) ** m, sub2 * eps ** (1.0 - m))

    return [("+", "phi1", up1), ("+", "phi2", up2),
            ("-", "phi1", low1), ("-", "phi2", low2)]


def _half_integer_predictions(m, w, c1, c2, k):
    if w == 0.0:
        raise ValidationError("half-integer expansions need omega != 0")
    if w - k <= 0.0 and float(w - k).is_integer():
        raise ValidationError("omega - k hits a gamma pole")
    a3 = 2.0 ** k * math.gamma(k) * math.gamma(w - k) * specfun.rgamma(w + k + 1.0)
    a3 = complex(a3)
    if a3 == 0.0:
        raise ValidationError("endpoint coefficient vanishes at this omega")
    bracket = (2.0 / math.pi) * c1 * math.sin(math.pi * (w - k)) \
        + c2 * math.cos(math.pi * (w - k))
    root2 = math.sqrt(2.0)

    def up1(eps):
        return (c2 * w * a3 / root2 * eps ** (0.5 - k),
                c1 * (2.0 / math.gamma(1.0 + k)) * 2.0 ** (-k - 0.5)
                * eps ** (k + 0.5))

    def up2(eps):
        return (c2 * k * a3 * root2 * eps ** (-k - 0.5),
                c1 * w * 2.0 ** (-k - 0.5) / math.gamma(2.0 + k)
                * eps ** (k + 1.5))

    def low1(eps):
        return (root2 * k * a3 * bracket * eps ** (-k - 0.5),)

    def low2(eps):
        return (w * a3 * bracket / root2 * eps ** (0.5 - k),)

    checks = [("+", "phi1", up1), ("+", "phi2", up2)]
    # lower-wall leading coefficients vanish at the eigenfrequencies of
    # the bracket; comparisons are only meaningful away from those zeros
    if abs(bracket) > 1e-9 * (abs(c1) + abs(c2)):
        checks.append(("-", "phi1", low1))
        checks.append(("-", "phi2", low2))
    return checks


def _log_mass_predictions(m, w, c1, c2):
    # k = 0 wall: the second Ferrers sum grows like a logarithm, with the
    # digamma constant below fixing the finite part
    try:
        psi = complex(specfun.digamma(w)).real
    except PoleError as exc:
        raise ValidationError(f"digamma pole at omega={w}") from exc
    const = 2.0 * math.log(2.0) - 2.0 * specfun.EULER_GAMMA - 2.0 * psi - 1.0 / w
    sin_pi = math.sin(math.pi * w)
    cos_pi = math.cos(math.pi * w)
    root2 = math.sqrt(2.0)
    lower_coef = c1 * (2.0 / (math.pi * w)) * sin_pi + c2 * cos_pi / w

    def up1(eps):
        root = math.sqrt(eps / 2.0)
        return (root * 2.0 * c1, root * c2 * (-2.0 * math.log(eps) + const))

    def up2(eps):
        return (root2 * (c2 / w) / math.sqrt(eps),
                c1 * w / root2 * eps ** 1.5)

    def low1(eps):
        return (root2 * lower_coef / math.sqrt(eps),)

    def low2(eps):
        log_eps = math.log(eps)
        inner1 = ((4.0 / math.pi) * sin_pi * log_eps + 2.0 * cos_pi
                  - (2.0 / math.pi) * sin_pi * const)
        inner2 = (2.0 * cos_pi * log_eps - cos_pi * const
                  - math.pi * sin_pi)
        root = math.sqrt(eps / 2.0)
        return (-root * c1 * inner1, -root * c2 * inner2)

    def density_up(eps):
        return (2.0 * abs(c2) ** 2 / (w * w) / eps,)

    def density_low(eps):
        return (2.0 * abs(lower_coef) ** 2 / eps,)

    checks = [("+", "phi1", up1), ("+", "phi2", up2),
              ("-", "phi2", low2), ("+", "density", density_up)]
    if abs(lower_coef) > 1e-9 * (abs(c1) + abs(c2)):
        checks.append(("-", "phi1", low1))
        checks.append(("-", "density", density_low))
    return checks


def asymptotic_verifier(M, omega, c1, c2, epsilons=_EPSILONS):
    """Compare wall limits of a general solution to their leading forms.

    For each epsilon the solution is evaluated at distance epsilon from
    both walls and each component (plus the amplitude density where the
    expansion is logarithmic) is checked against its closed-form leading
    behavior; rel_error is measured against the largest retained term, so
    a benign cancellation between terms cannot masquerade as disagreement.
    """
    m = float(M)
    w = float(omega)
    c1 = complex(c1)
    c2 = complex(c2)
    if c1 == 0.0 and c2 == 0.0:
        raise ValidationError("solution is identically zero")
    regime = modes.mass_regime(m)
    if regime.regime == modes.MASSLESS:
        raise ValidationError(
            "massless solutions are trigonometric; no wall expansion needed")
    if w == 0.0 and regime.regime != modes.HALF_INTEGER:
        raise ValidationError("omega = 0 solutions are exact powers already")
    if regime.regime == modes.HALF_INTEGER:
        k = regime.half_index
        if k == 0:
            plans = _log_mass_predictions(m, w, c1, c2)
        else:
            plans = _half_integer_predictions(m, w, c1, c2, k)
    else:
        plans = _generic_predictions(m, w, c1, c2)

    sol = modes.general_solution(m, w, c1, c2)
    checks = []
    for eps in epsilons:
        up, low = _wall_values(sol, eps)
        values = {
            ("+", "phi1"): up[0],
            ("+", "phi2"): up[1],
            ("-", "phi1"): low[0],
            ("-", "phi2"): low[1],
            ("+", "density"): np.sum(np.abs(up) ** 2),
            ("-", "density"): np.sum(np.abs(low) ** 2),
        }
        for endpoint, quantity, predict in plans:
            terms = [complex(t) for t in predict(eps)]
            predicted = sum(terms)
            actual = complex(values[endpoint, quantity])
            denom = max([abs(t) for t in terms] + [abs(actual)])
            rel = abs(actual - predicted) / denom if denom > 0.0 else 0.0
            checks.append(AsymptoticCheck(
                endpoint=endpoint, quantity=quantity, epsilon=eps,
                predicted=predicted, actual=actual, rel_error=rel))
    return AsymptoticReport(M=m, omega=w, c1=c1, c2=c2,
                            regime=regime.regime, checks=tuple(checks))
