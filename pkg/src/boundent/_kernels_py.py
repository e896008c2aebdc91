"""Numpy implementations of the hot kernels.

Used when the compiled ``_kernels`` extension is unavailable, and as the
reference the compiled versions are tested against.
"""
import numpy as np


def partial_transpose(rho, da, db):
    return np.ascontiguousarray(
        rho.reshape(da, db, da, db).transpose(0, 3, 2, 1).reshape(da * db, da * db)
    )


def apply_a(x, da, db):
    # A = 4 P_-(A1A2) P_-(B1B2) = (1 - S_A)(1 - S_B); copies ordered a1 b1 a2 b2
    t = x.reshape(da, db, da, db)
    y = t - t.transpose(2, 1, 0, 3) - t.transpose(0, 3, 2, 1) + t.transpose(2, 3, 0, 1)
    return np.ascontiguousarray(y.reshape(-1))


def t_matrix(mu, vecs, chi):
    n, r = vecs.shape
    if chi.shape[0] != n * n or mu.shape[0] != r:
        raise ValueError("shape mismatch in t_matrix")
    root = np.sqrt(mu)
    core = vecs.conj().T @ chi.reshape(n, n) @ vecs.conj()
    return root[:, None] * core * root[None, :]


def bell_singulars(lam, n, m):
    d = lam.shape[0]
    k = np.arange(d)[:, None]
    l = np.arange(d)[None, :]
    mirror = lam[(2 * n - k) % d, (2 * m - l) % d]
    inner = mirror / d**2
    inner[n, m] += (1.0 - 2.0 / d) * lam[n, m]
    val = d / (2.0 * (d - 1)) * lam * inner
    return np.sqrt(np.clip(val, 0.0, None))
