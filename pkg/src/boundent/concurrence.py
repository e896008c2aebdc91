"""Concurrence of pure states and the quasi-pure lower bound for mixed states.

Two routes to the bound are provided. :func:`cqp` works for any density
matrix: it diagonalises ``rho``, builds ``chi = A |psi0>|psi0>`` from the
dominant eigenvector and takes singular values of the T matrix.
:func:`cqp_bell` evaluates the closed-form singular values of Bell-diagonal
states directly from the weights.

The closed form is evaluated as printed in the literature. Under
``ChiNorm.CONCURRENCE_NORMALIZED`` the generic singular values are exactly
``BELL_TO_GENERIC`` times the closed-form ones, so detection (bound > 0)
agrees between routes while reported magnitudes differ by that factor.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .bell import BellIndex, BellSpectrum, _require_physical, dominant_index
from .config import DEFAULT_QP, DEFAULT_TOLERANCES, ChiNorm, QpConfig, Tolerances
from .errors import BadDims, DegenerateChi, IndexOutOfRange, NotNormalized
from .state import BipartiteDensity, PureState, hermitian_spectrum, singular_values

__all__ = [
    "QpReport",
    "BELL_TO_GENERIC",
    "a_operator",
    "a_expectation",
    "pure_concurrence",
    "chi_vector",
    "qp_matrix",
    "cqp",
    "bell_singular",
    "cqp_bell",
    "wootters_concurrence",
]

# measured ratio generic / closed-form singular values (ConcurrenceNormalized)
BELL_TO_GENERIC = 2.0

_DEGENERATE_C = 1e-12


@dataclass(frozen=True)
class QpReport:
    """Result of a quasi-pure bound evaluation.

    ``dominant_eigenvalue`` and ``dominant_index`` describe the eigenvector
    that anchored ``chi``: the position in the descending spectrum for the
    generic route, the Bell index ``(n, m)`` for the closed-form route.
    """

    value: float
    singulars: tuple[float, ...]
    dominant_eigenvalue: float
    dominant_index: int | BellIndex
    rank: int
    degenerate_chi: bool = False


def _bound(s: np.ndarray) -> float:
    if s.size == 0:
        return 0.0
    return max(0.0, float(s[0] - np.sum(s[1:])))


def _check_normalized(psi: PureState, tol: Tolerances) -> None:
    norm = np.linalg.norm(psi.amplitudes)
    if abs(norm - 1.0) > tol.norm_tol:
        raise NotNormalized(f"state norm is {norm:.6g}")


def a_operator(dim_a: int, dim_b: int) -> np.ndarray:
    """Dense A on the doubled space, copies ordered ``a1 b1 a2 b2``.

    ``A = 4 P_-(a1, a2) P_-(b1, b2)``; the product of antisymmetric projectors
    makes ``A @ A == 4 * A``. Intended for checks; the library applies A
    through :func:`boundent.kernels.apply_a` instead.
    """
    n = (dim_a * dim_b) ** 2
    return np.stack([kernels.apply_a(e, dim_a, dim_b) for e in np.eye(n, dtype=complex)], axis=1)


def _doubled(psi: np.ndarray) -> np.ndarray:
    return np.kron(psi, psi)


def a_expectation(psi: PureState, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    _check_normalized(psi, tol)
    x = _doubled(psi.amplitudes)
    val = np.vdot(x, kernels.apply_a(x, psi.dim_a, psi.dim_b)).real
    return max(0.0, float(val))


def pure_concurrence(psi: PureState, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    return float(np.sqrt(a_expectation(psi, tol)))


def chi_vector(psi0: PureState, cfg: QpConfig = DEFAULT_QP,
               tol: Tolerances = DEFAULT_TOLERANCES) -> tuple[np.ndarray, bool]:
    """Return ``(chi, degenerate)``.

    ``degenerate`` is set, and ``chi`` is zero, when ``psi0`` is (numerically)
    a product state, since A then annihilates ``psi0 (x) psi0``.
    """
    _check_normalized(psi0, tol)
    x = _doubled(psi0.amplitudes)
    v = kernels.apply_a(x, psi0.dim_a, psi0.dim_b)
    c = np.sqrt(max(0.0, np.vdot(x, v).real))
    if c < _DEGENERATE_C:
        return np.zeros_like(v), True
    if cfg.chi_norm is ChiNorm.CONCURRENCE_NORMALIZED:
        return v / c, False
    return v / np.linalg.norm(v), False


def _support(rho: BipartiteDensity, cfg: QpConfig, tol: Tolerances):
    spec = hermitian_spectrum(rho.mat, tol)
    keep = spec.eigenvalues >= cfg.rank_tol
    return spec.eigenvalues[keep], spec.eigenvectors[:, keep]


def qp_matrix(rho: BipartiteDensity, cfg: QpConfig = DEFAULT_QP,
              tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """``T_ij = sqrt(mu_i mu_j) <psi_i|<psi_j| chi>`` over the support of ``rho``.

    Raises
    ------
    DegenerateChi
        If the dominant eigenvector is a product state.
    """
    mu, vecs = _support(rho, cfg, tol)
    return _t_from_support(rho, mu, vecs, cfg, tol)


def _t_from_support(rho, mu, vecs, cfg, tol):
    psi0 = PureState(rho.dim_a, rho.dim_b, vecs[:, 0])
    chi, degenerate = chi_vector(psi0, cfg, tol)
    if degenerate:
        raise DegenerateChi("dominant eigenvector is a product state")
    return kernels.t_matrix(mu, vecs, chi)


def cqp(rho: BipartiteDensity, cfg: QpConfig = DEFAULT_QP,
        tol: Tolerances = DEFAULT_TOLERANCES) -> QpReport:
    """Quasi-pure lower bound ``max(0, S_0 - sum_{i>0} S_i)`` on the concurrence."""
    mu, vecs = _support(rho, cfg, tol)
    try:
        t = _t_from_support(rho, mu, vecs, cfg, tol)
    except DegenerateChi:
        return QpReport(0.0, (), float(mu[0]), 0, len(mu), degenerate_chi=True)
    s = singular_values(t)
    return QpReport(_bound(s), tuple(float(x) for x in s), float(mu[0]), 0, len(mu))


def bell_singular(spec: BellSpectrum, nm: BellIndex, kl: BellIndex,
                  tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Closed-form singular value ``S_kl^{nm}`` for a Bell-diagonal state."""
    _require_physical(spec, tol)
    d = spec.d
    n, m = nm
    k, l = kl
    for a, b in (nm, kl):
        if not (0 <= a < d and 0 <= b < d):
            raise IndexOutOfRange(f"Bell index ({a}, {b}) outside [0, {d})")
    lam = spec.lam
    inner = lam[(2 * n - k) % d, (2 * m - l) % d] / d**2
    if (k, l) == (n, m):
        inner += (1.0 - 2.0 / d) * lam[n, m]
    val = d / (2.0 * (d - 1)) * lam[k, l] * inner
    return float(np.sqrt(max(val, 0.0)))


def cqp_bell(spec: BellSpectrum, nm: BellIndex | None = None,
             tol: Tolerances = DEFAULT_TOLERANCES) -> QpReport:
    """Closed-form quasi-pure bound for a Bell-diagonal state.

    ``nm`` overrides the anchoring Bell index; by default the largest weight
    is used, ties resolved lexicographically.
    """
    if nm is None:
        nm = dominant_index(spec, tol)
    else:
        _require_physical(spec, tol)
        nm = BellIndex(*nm)
    grid = kernels.bell_singulars(spec.lam, nm.k, nm.l)
    s = np.sort(grid.reshape(-1))[::-1]
    rank = int(np.count_nonzero(spec.lam > tol.phys_tol))
    return QpReport(_bound(s), tuple(float(x) for x in s), float(spec.lam[nm]), nm, rank)


_SYSY = np.kron(np.array([[0, -1j], [1j, 0]]), np.array([[0, -1j], [1j, 0]]))


def wootters_concurrence(rho: BipartiteDensity) -> float:
    """Exact two-qubit concurrence.

    Uses singular values of ``tau = W^T (sy x sy) W`` with ``W = V sqrt(mu)``
    from the spectrum of ``rho``; these equal the square roots of the
    eigenvalues of ``rho rho~`` without taking roots of noisy eigenvalues.
    """
    if (rho.dim_a, rho.dim_b) != (2, 2):
        raise BadDims("Wootters concurrence needs a 2 x 2 system")
    mu, vecs = np.linalg.eigh(rho.mat)
    w = vecs * np.sqrt(np.clip(mu, 0.0, None))
    nu = np.linalg.svd(w.T @ _SYSY @ w, compute_uv=False)
    return max(0.0, float(nu[0] - nu[1:].sum()))
