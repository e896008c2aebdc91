"""Kernel backend selection.

The compiled Cython module is used when it imports; otherwise the numpy
versions in ``_kernels_py`` take over. ``BACKEND`` names the active one.
"""
import numpy as np

from . import _kernels_py

try:
    from . import _kernels as _impl
except ImportError:  # extension not built
    _impl = _kernels_py
    BACKEND = "python"
else:
    BACKEND = "cython"


def partial_transpose(rho, da, db):
    return _impl.partial_transpose(np.ascontiguousarray(rho, dtype=np.complex128), da, db)


def apply_a(x, da, db):
    return _impl.apply_a(np.ascontiguousarray(x, dtype=np.complex128), da, db)


def t_matrix(mu, vecs, chi):
    return _impl.t_matrix(
        np.ascontiguousarray(mu, dtype=np.float64),
        np.ascontiguousarray(vecs, dtype=np.complex128),
        np.ascontiguousarray(chi, dtype=np.complex128),
    )


def bell_singulars(lam, n, m):
    return _impl.bell_singulars(np.ascontiguousarray(lam, dtype=np.float64), n, m)
