"""Special functions on the ranges the radial solutions need.

Gauss hypergeometric series with connection-formula routing near x=1,
Jacobi polynomials by recurrence, Ferrers functions of both kinds with
integer order -k (the second kind through the explicit limit formula,
valid for complex degree), log-gamma/digamma, Chebyshev.

Everything is 64-bit floating point.  Functions accept real arguments;
the hypergeometric and Ferrers routines also accept complex degree
parameters, which the imaginary-frequency probes require.
"""

import cmath
import math

import numpy as np

from . import _kernels
from .errors import (
    BranchError,
    ConvergenceError,
    DomainError,
    PoleError,
    SingularParameterError,
)

EULER_GAMMA = 0.5772156649015328606
SERIES_TOL = 1e-16
SERIES_MAX_TERMS = 10000

# Lanczos approximation, g = 7, 9 coefficients
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def _is_nonpositive_int(x, tol=1e-12):
    if isinstance(x, complex):
        if abs(x.imag) > tol:
            return False
        x = x.real
    return x <= 0.5 and abs(x - round(x)) <= tol


def _is_int(x, tol=1e-12):
    if isinstance(x, complex):
        if abs(x.imag) > tol:
            return False
        x = x.real
    return abs(x - round(x)) <= tol


def _realify(value, *params):
    if any(isinstance(p, complex) and p.imag != 0.0 for p in params):
        return value
    return value.real


# ---------------------------------------------------------------------------
# gamma family


def gamma_ln(x):
    """log|Gamma(x)| for real x, poles excluded."""
    if _is_nonpositive_int(x):
        raise PoleError(f"log-gamma pole at x={x}")
    return math.lgamma(x)


def loggamma(z):
    """Principal-branch-agnostic complex log-gamma (used through exp only)."""
    if not isinstance(z, complex):
        z = complex(z)
    if _is_nonpositive_int(z):
        raise PoleError(f"log-gamma pole at z={z}")
    if z.real < 0.5:
        return cmath.log(cmath.pi / cmath.sin(cmath.pi * z)) - loggamma(1.0 - z)
    z = z - 1.0
    acc = complex(_LANCZOS_COEF[0])
    for i in range(1, len(_LANCZOS_COEF)):
        acc += _LANCZOS_COEF[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return 0.5 * math.log(2.0 * math.pi) + (z + 0.5) * cmath.log(t) - t + cmath.log(acc)


def gamma_fn(z):
    """Gamma function; real in, real out; complex supported."""
    if isinstance(z, complex) and z.imag != 0.0:
        return cmath.exp(loggamma(z))
    x = z.real if isinstance(z, complex) else z
    if _is_nonpositive_int(x):
        raise PoleError(f"gamma pole at x={x}")
    return math.gamma(x)


def rgamma(z):
    """1/Gamma(z), entire; zero at the poles of Gamma."""
    if not isinstance(z, complex):
        z = complex(z)
    if z.real < 0.5:
        if _is_nonpositive_int(z):
            return _realify(complex(0.0), z)
        return _realify(cmath.sin(cmath.pi * z) / cmath.pi * cmath.exp(loggamma(1.0 - z)), z)
    return _realify(cmath.exp(-loggamma(z)), z)


# asymptotic digamma tail: B_{2j}/(2j) for j = 1..7
_DIGAMMA_TAIL = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)

_DIGAMMA_SHIFT = 12.0


def digamma(x):
    """psi(x) for real or complex x away from the poles 0, -1, -2, ..."""
    if _is_nonpositive_int(x):
        raise PoleError(f"digamma pole at x={x}")
    cplx = isinstance(x, complex) and x.imag != 0.0
    z = complex(x)
    acc = complex(0.0)
    if z.real < 0.0:
        acc -= cmath.pi / cmath.tan(cmath.pi * z)
        z = 1.0 - z
    while z.real < _DIGAMMA_SHIFT:
        acc -= 1.0 / z
        z += 1.0
    acc += cmath.log(z) - 0.5 / z
    w = 1.0 / (z * z)
    term = w
    for coef in _DIGAMMA_TAIL:
        acc -= coef * term
        term *= w
    return acc if cplx else acc.real


# ---------------------------------------------------------------------------
# Gauss hypergeometric


def _check_hyp_args(c, x, include_lo, include_hi):
    ok_lo = x >= 0.0 if include_lo else x > 0.0
    ok_hi = x <= 1.0 if include_hi else x < 1.0
    if not (ok_lo and ok_hi):
        raise DomainError(f"argument x={x} outside the supported interval")
    if _is_nonpositive_int(c):
        raise PoleError(f"series parameter c={c} is a nonpositive integer")


def _series(a, b, c, x):
    val = _kernels.hyp2f1_series(complex(a), complex(b), complex(c), float(x),
                                 SERIES_TOL, SERIES_MAX_TERMS)
    if val != val:
        raise ConvergenceError(
            f"hypergeometric series did not converge for a={a}, b={b}, c={c}, x={x}")
    return val


def _from_complement(a, b, c, omx):
    """F(a,b;c;1-omx) summed through the two series in omx (omx = 1-x)."""
    a = complex(a)
    b = complex(b)
    gap = c - a - b
    if _is_int(gap):
        raise BranchError(
            f"c-a-b={gap} is an integer; the two-series transformation degenerates")
    if omx == 0.0:
        if gap.real <= 0.0:
            raise DomainError("x=1 requires c-a-b > 0 for a finite value")
        return cmath.exp(loggamma(c) + loggamma(gap)) * rgamma(c - a) * rgamma(c - b)
    coef1 = cmath.exp(loggamma(c) + loggamma(gap)) * complex(rgamma(c - a)) * complex(rgamma(c - b))
    coef2 = cmath.exp(loggamma(c) + loggamma(-gap)) * complex(rgamma(a)) * complex(rgamma(b))
    s1 = _series(a, b, 1.0 - gap, omx) if coef1 != 0.0 else 0.0
    s2 = _series(c - a, c - b, 1.0 + gap, omx) if coef2 != 0.0 else 0.0
    pw = cmath.exp(gap * math.log(omx))
    return coef1 * s1 + coef2 * pw * s2


def hyp2f1(a, b, c, x):
    """F(a,b;c;x) on x in [0,1).

    Direct series for x <= 0.5, two-series transformation beyond.  When
    c-a-b is an integer the transformation degenerates and the direct
    series is used for all x (adequate until x approaches 1).
    """
    _check_hyp_args(c, x, True, False)
    if x <= 0.5 or _is_nonpositive_int(a) or _is_nonpositive_int(b):
        return _realify(_series(a, b, c, x), a, b)
    gap = complex(c) - complex(a) - complex(b)
    if _is_int(gap):
        return _realify(_series(a, b, c, x), a, b)
    return _realify(_from_complement(a, b, c, 1.0 - x), a, b)


def hyp2f1_connected(a, b, c, x):
    """F(a,b;c;x) on (0,1] forced through the transformed series in 1-x.

    Requires c-a-b non-integer; raises BranchError otherwise.
    """
    _check_hyp_args(c, x, False, True)
    return _realify(_from_complement(a, b, c, 1.0 - x), a, b)


def hyp2f1_from_complement(a, b, c, omx):
    """F(a,b;c;1-omx) with the complement omx passed exactly.

    Entry point for endpoint-accurate evaluation: near x=1 the caller
    knows 1-x to full precision while x itself has rounded.
    """
    if not 0.0 <= omx < 1.0:
        raise DomainError(f"complement {omx} outside [0,1)")
    if _is_nonpositive_int(c):
        raise PoleError(f"series parameter c={c} is a nonpositive integer")
    return _realify(_from_complement(a, b, c, omx), a, b)


# ---------------------------------------------------------------------------
# Jacobi / Chebyshev


def _check_jacobi(n, a, b):
    if n < 0 or n != int(n):
        raise DomainError(f"degree n={n} must be a nonnegative integer")
    s = a + b
    if n >= 2 and _is_int(s):
        si = round(s)
        # recurrence coefficient 2m(m+s)(2m+s-2) vanishes for some m in [2, n]
        if (2 <= -si <= n) or (si % 2 == 0 and 2 <= (2 - si) // 2 <= n):
            raise SingularParameterError(
                f"three-term recurrence degenerates for alpha+beta={s}")


def jacobi_p_values(n, a, b, x):
    """P_n^{(a,b)} evaluated on a 1-d float array."""
    _check_jacobi(n, a, b)
    return _kernels.jacobi_p_arr(int(n), float(a), float(b),
                                 np.ascontiguousarray(x, dtype=np.float64))


def jacobi_p(n, a, b, x):
    """Jacobi polynomial P_n^{(a,b)}(x) for x in [-1,1]."""
    if not -1.0 <= x <= 1.0:
        raise DomainError(f"argument x={x} outside [-1,1]")
    return float(jacobi_p_values(n, a, b, np.array([x]))[0])


def chebyshev_t(n, x):
    """Chebyshev T_n(x) through the (-1/2,-1/2) Jacobi normalization."""
    scale = math.gamma(n + 0.5) / (math.gamma(0.5) * math.factorial(n))
    return jacobi_p(n, -0.5, -0.5, x) / scale


# ---------------------------------------------------------------------------
# Ferrers functions, order -k (k >= 0 integer), argument inside (-1,1)

# Connection between arguments x and -x (degree nu, order -k):
#   P(-x) =  cos(pi(nu-k)) P(x) - (2/pi) sin(pi(nu-k)) Q(x)
#   Q(-x) = -cos(pi(nu-k)) Q(x) - (pi/2) sin(pi(nu-k)) P(x)


def _check_ferrers(nu, k, x=None):
    if k < 0 or k != int(k):
        raise DomainError(f"order index k={k} must be a nonnegative integer")
    if x is not None and not -1.0 < x < 1.0:
        raise DomainError(f"argument x={x} outside (-1,1)")


def _ferrers_p_half(nu, k, z):
    """P_nu^{-k}(x) with z=(1-x)/2 in (0, 1/2]."""
    f = _series(nu + 1.0, -nu, 1.0 + k, z)
    return (z / (1.0 - z)) ** (0.5 * k) * f / math.factorial(k)


def _ferrers_pq_half(nu, k, z):
    """(P, Q) at argument x = 1-2z for z in (0, 1/2], any complex degree nu.

    Q comes from the closed-form limit of the general-order definition at
    order -k: a digamma-weighted pair of series sharing the P series.
    """
    a = complex(nu) + 1.0
    b = -complex(nu)
    if _is_nonpositive_int(a - k) or _is_nonpositive_int(a + k):
        raise SingularParameterError(
            f"Ferrers Q limit formula degenerates at degree nu={nu}, order -{k}")
    kf = math.factorial(k)
    hlw = 0.5 * math.log((1.0 - z) / z)
    wmk = (z / (1.0 - z)) ** (0.5 * k)
    f = _series(a, b, 1.0 + k, z)
    p = wmk * f / kf

    dc = _kernels.hyp2f1_dc_sum(a, b, 1.0 + k, z, SERIES_TOL, SERIES_MAX_TERMS)
    if dc != dc:
        raise ConvergenceError("c-derivative series did not converge")
    dm = p * (hlw + digamma(1.0 + k)) + wmk * dc / kf

    g = cmath.exp(loggamma(a - k) - loggamma(a + k))
    pk = (-1.0) ** k * p / g
    head = complex(0.0)
    term = complex(1.0)
    for n in range(k):
        head += term * (-1.0) ** (k - 1 - n) * math.factorial(k - 1 - n)
        term = term * (a + n) * (b + n) * z / (n + 1.0)
    tail = _kernels.ferrers_q_log_tail(a, b, int(k), z, SERIES_TOL, SERIES_MAX_TERMS)
    if tail != tail:
        raise ConvergenceError("logarithmic tail series did not converge")
    t = head - tail
    dp = hlw * pk - ((1.0 - z) / z) ** (0.5 * k) * t
    q = 0.5 * dm + 0.5 * (-1.0) ** k * g * (dp - (digamma(a - k) + digamma(a + k)) * pk)
    return p, q


def ferrers_pq_from_complement(nu, k, z, side):
    """(P, Q) of order -k with the endpoint complement passed exactly.

    side=+1: z = (1-x)/2 (x in [0,1), z in (0, 1/2]).
    side=-1: z = (1+x)/2 for x in (-1,0]; values at x recovered through the
    argument-reflection connection formulas.
    """
    _check_ferrers(nu, k)
    if not 0.0 < z <= 0.5:
        raise DomainError(f"complement z={z} outside (0, 1/2]")
    p, q = _ferrers_pq_half(nu, k, z)
    if side >= 0:
        return _realify(p, nu), _realify(q, nu)
    cn = cmath.cos(cmath.pi * (complex(nu) - k))
    sn = cmath.sin(cmath.pi * (complex(nu) - k))
    pm = cn * p - (2.0 / cmath.pi) * sn * q
    qm = -cn * q - (cmath.pi / 2.0) * sn * p
    return _realify(pm, nu), _realify(qm, nu)


def ferrers_pq(nu, k, x):
    """Both Ferrers functions P_nu^{-k}(x), Q_nu^{-k}(x) in one evaluation."""
    _check_ferrers(nu, k, x)
    if x >= 0.0:
        return ferrers_pq_from_complement(nu, k, 0.5 * (1.0 - x), +1)
    return ferrers_pq_from_complement(nu, k, 0.5 * (1.0 + x), -1)


def ferrers_p(nu, k, x):
    """Ferrers function of the first kind, order -k."""
    _check_ferrers(nu, k, x)
    if x >= 0.0:
        return _realify(_ferrers_p_half(nu, k, 0.5 * (1.0 - x)), nu)
    return ferrers_pq(nu, k, x)[0]


def ferrers_q(nu, k, x):
    """Ferrers function of the second kind, order -k (limit definition)."""
    return ferrers_pq(nu, k, x)[1]
