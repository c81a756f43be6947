# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled variants of the series/recurrence kernels in ``_impl_py``."""

import numpy as np


_EULER = 0.5772156649015328606


def hyp2f1_series(double complex a, double complex b, double complex c, double z,
                  double tol=1e-16, int max_terms=10000):
    cdef double complex term = 1.0
    cdef double complex total = 1.0
    cdef int small = 0
    cdef int n
    for n in range(max_terms):
        term = term * (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z
        total = total + term
        if abs(term) <= tol * abs(total):
            small += 1
            if small >= 2:
                return total
        else:
            small = 0
    return complex(float("nan"), float("nan"))


def hyp2f1_dc_sum(double complex a, double complex b, double complex c, double z,
                  double tol=1e-16, int max_terms=10000):
    cdef double complex term = 1.0
    cdef double complex harm = 0.0
    cdef double complex total = 0.0
    cdef double scale = 0.0
    cdef double mag
    cdef int small = 0
    cdef int n
    for n in range(max_terms):
        harm += 1.0 / (c + n)
        term = term * (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z
        total = total + term * harm
        mag = abs(total)
        if mag > scale:
            scale = mag
        if abs(term) * abs(harm) <= tol * scale or term == 0.0:
            small += 1
            if small >= 2:
                return total
        else:
            small = 0
    return complex(float("nan"), float("nan"))


def ferrers_q_log_tail(double complex a, double complex b, int k, double z,
                       double tol=1e-16, int max_terms=10000):
    cdef double complex coef = 1.0
    cdef int j, m
    for j in range(k):
        coef = coef * (a + j) * (b + j) * z / (j + 1.0)
    if coef == 0.0:
        return complex(0.0)
    cdef double complex term = coef
    cdef double harm = 0.0
    cdef double complex total = 0.0
    cdef double scale = abs(coef)
    cdef double mag
    cdef int small = 0
    for m in range(max_terms):
        total = total + term * (harm - _EULER)
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
    return complex(float("nan"), float("nan"))


def jacobi_p_arr(int n, double alpha, double beta, x):
    x_arr = np.ascontiguousarray(x, dtype=np.float64)
    out = np.empty_like(x_arr)
    cdef double[::1] xv = x_arr
    cdef double[::1] ov = out
    cdef Py_ssize_t i, npts = xv.shape[0]
    cdef int m
    cdef double s = alpha + beta
    cdef double c1, c2, c3, c4, c5
    cdef double p_prev, p_cur, p_next, xi
    c4 = alpha * alpha - beta * beta
    for i in range(npts):
        xi = xv[i]
        p_prev = 1.0
        if n == 0:
            ov[i] = p_prev
            continue
        p_cur = 0.5 * (alpha - beta) + 0.5 * (s + 2.0) * xi
        for m in range(2, n + 1):
            c1 = 2.0 * m * (m + s) * (2.0 * m + s - 2.0)
            c2 = 2.0 * m + s - 1.0
            c3 = (2.0 * m + s) * (2.0 * m + s - 2.0)
            c5 = 2.0 * (m + alpha - 1.0) * (m + beta - 1.0) * (2.0 * m + s)
            p_next = (c2 * (c3 * xi + c4) * p_cur - c5 * p_prev) / c1
            p_prev = p_cur
            p_cur = p_next
        ov[i] = p_cur
    return out
