# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled inner loops; see ``_kernels_py`` for the reference numpy versions."""
import numpy as np

from libc.math cimport sqrt


def partial_transpose(const double complex[:, ::1] rho, Py_ssize_t da, Py_ssize_t db):
    cdef Py_ssize_t n = da * db
    out = np.empty((n, n), dtype=np.complex128)
    cdef double complex[:, ::1] o = out
    cdef Py_ssize_t i, k, j, l
    with nogil:
        for i in range(da):
            for k in range(db):
                for j in range(da):
                    for l in range(db):
                        o[i * db + k, j * db + l] = rho[i * db + l, j * db + k]
    return out


def apply_a(const double complex[::1] x, Py_ssize_t da, Py_ssize_t db):
    cdef Py_ssize_t n = da * db
    if x.shape[0] != n * n:
        raise ValueError("doubled vector has the wrong length")
    out = np.empty(n * n, dtype=np.complex128)
    cdef double complex[::1] y = out
    cdef Py_ssize_t a1, b1, a2, b2
    with nogil:
        for a1 in range(da):
            for b1 in range(db):
                for a2 in range(da):
                    for b2 in range(db):
                        y[(a1 * db + b1) * n + a2 * db + b2] = (
                            x[(a1 * db + b1) * n + a2 * db + b2]
                            - x[(a2 * db + b1) * n + a1 * db + b2]
                            - x[(a1 * db + b2) * n + a2 * db + b1]
                            + x[(a2 * db + b2) * n + a1 * db + b1]
                        )
    return out


def t_matrix(const double[::1] mu, const double complex[:, ::1] vecs,
             const double complex[::1] chi):
    cdef Py_ssize_t n = vecs.shape[0]
    cdef Py_ssize_t r = vecs.shape[1]
    if chi.shape[0] != n * n or mu.shape[0] != r:
        raise ValueError("shape mismatch in t_matrix")
    out = np.empty((r, r), dtype=np.complex128)
    cdef double complex[:, ::1] t = out
    # half[j, x] = sum_y chi[x, y] conj(v_j[y])
    half_arr = np.empty((r, n), dtype=np.complex128)
    cdef double complex[:, ::1] half = half_arr
    cdef Py_ssize_t i, j, x, y
    cdef double complex acc
    with nogil:
        for j in range(r):
            for x in range(n):
                acc = 0
                for y in range(n):
                    acc = acc + chi[x * n + y] * vecs[y, j].conjugate()
                half[j, x] = acc
        for i in range(r):
            for j in range(r):
                acc = 0
                for x in range(n):
                    acc = acc + vecs[x, i].conjugate() * half[j, x]
                t[i, j] = acc * sqrt(mu[i] * mu[j])
    return out


def bell_singulars(const double[:, ::1] lam, Py_ssize_t n, Py_ssize_t m):
    cdef Py_ssize_t d = lam.shape[0]
    out = np.empty((d, d), dtype=np.float64)
    cdef double[:, ::1] s = out
    cdef double pref = d / (2.0 * (d - 1))
    cdef double diag = (1.0 - 2.0 / d) * lam[n, m]
    cdef double inv_d2 = 1.0 / (d * d)
    cdef double val
    cdef Py_ssize_t k, l
    with nogil:
        for k in range(d):
            for l in range(d):
                val = inv_d2 * lam[((2 * n - k) % d + d) % d, ((2 * m - l) % d + d) % d]
                if k == n and l == m:
                    val = val + diag
                val = pref * lam[k, l] * val
                s[k, l] = sqrt(val) if val > 0 else 0.0
    return out
