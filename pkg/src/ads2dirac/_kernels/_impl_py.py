"""Series and recurrence kernels, pure-Python reference implementation.

The compiled variant in ``_impl_cy.pyx`` mirrors these signatures exactly;
``ads2dirac._kernels`` picks whichever is importable.  Kernels never raise on
non-convergence, they return NaN and leave error handling to callers.
"""

import numpy as np

_NAN = complex(float("nan"), float("nan"))
_EULER = 0.5772156649015328606


def hyp2f1_series(a, b, c, z, tol=1e-16, max_terms=10000):
    """Gauss series sum_n (a)_n (b)_n / ((c)_n n!) z^n.

    a, b may be complex; c and z are real with |z| < 1.  Terminating
    parameter values (a or b a nonpositive integer) exit early with the
    exact polynomial value.
    """
    term = complex(1.0)
    total = complex(1.0)
    small = 0
    for n in range(max_terms):
        term = term * (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z
        total += term
        if abs(term) <= tol * abs(total):
            small += 1
            if small >= 2:
                return total
        else:
            small = 0
    return _NAN


def hyp2f1_dc_sum(a, b, c, z, tol=1e-16, max_terms=10000):
    """Sum_{n>=1} (a)_n (b)_n / ((c)_n n!) z^n * (psi(c+n) - psi(c)).

    The digamma differences are accumulated as running sums of 1/(c+j),
    so no digamma evaluations occur.  The c-derivative of the Gauss
    series equals minus this sum.
    """
    term = complex(1.0)
    harm = complex(0.0)
    total = complex(0.0)
    scale = 0.0
    small = 0
    for n in range(max_terms):
        harm += 1.0 / (c + n)
        term = term * (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z
        total += term * harm
        mag = abs(total)
        if mag > scale:
            scale = mag
        if abs(term) * abs(harm) <= tol * scale or term == 0.0:
            small += 1
            if small >= 2:
                return total
        else:
            small = 0
    return _NAN


def ferrers_q_log_tail(a, b, k, z, tol=1e-16, max_terms=10000):
    """Sum_{m>=0} (a)_{k+m} (b)_{k+m} z^{k+m} / ((k+m)! m!) * psi(m+1).

    psi(m+1) = -EULER + H_m is carried as a running harmonic sum.
    """
    coef = complex(1.0)
    for j in range(k):
        coef = coef * (a + j) * (b + j) * z / (j + 1.0)
    if coef == 0.0:
        return complex(0.0)
    term = coef
    harm = 0.0
    total = complex(0.0)
    scale = abs(coef)
    small = 0
    for m in range(max_terms):
        total += term * (harm - _EULER)
        mag = abs(total)
        if mag > scale:
            scale = mag
        if abs(term) * (abs(harm - _EULER) + 1.0) <= tol * scale:
            small += 1
            if small >= 2:
                return total
        else:
            small = 0
        term = term * (a + k + m) * (b + k + m) * z / ((k + m + 1.0) * (m + 1.0))
        harm += 1.0 / (m + 1.0)
    return _NAN


def jacobi_p_arr(n, alpha, beta, x):
    """Jacobi polynomial P_n^{(alpha,beta)} on an array via the three-term
    recurrence, started from the explicit degree-0 and degree-1 values."""
    x = np.asarray(x, dtype=np.float64)
    p_prev = np.ones_like(x)
    if n == 0:
        return p_prev
    p_cur = 0.5 * (alpha - beta) + 0.5 * (alpha + beta + 2.0) * x
    for m in range(2, n + 1):
        s = alpha + beta
        c1 = 2.0 * m * (m + s) * (2.0 * m + s - 2.0)
        c2 = 2.0 * m + s - 1.0
        c3 = (2.0 * m + s) * (2.0 * m + s - 2.0)
        c4 = alpha * alpha - beta * beta
        c5 = 2.0 * (m + alpha - 1.0) * (m + beta - 1.0) * (2.0 * m + s)
        p_next = (c2 * (c3 * x + c4) * p_cur - c5 * p_prev) / c1
        p_prev = p_cur
        p_cur = p_next
    return p_cur
