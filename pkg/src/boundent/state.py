"""Validated bipartite states and the dense linear algebra built on them.

Product basis ordering is ``index = a * dim_b + b`` (first subsystem major)
throughout the package.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import kernels
from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import (
    BadDims,
    NoConvergence,
    NotHermitian,
    NotNormalized,
    NotPositive,
    NotUnitTrace,
    ParseError,
)

__all__ = [
    "BipartiteDensity",
    "PureState",
    "Spectrum",
    "density_from_matrix",
    "pure_state",
    "partial_transpose",
    "hermitian_spectrum",
    "singular_values",
    "partial_trace",
    "purity",
    "trace_norm",
    "load_matrix_file",
    "save_matrix_file",
]

# eigenvalues closer than this are treated as degenerate when ordering
_TIE_TOL = 1e-12


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, dtype=np.complex128, copy=True)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class BipartiteDensity:
    """Density matrix on a ``dim_a x dim_b`` space.

    Build instances with :func:`density_from_matrix`, which validates;
    the constructor itself trusts its input.
    """

    dim_a: int
    dim_b: int
    mat: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "mat", _frozen(self.mat))

    @property
    def dim(self) -> int:
        return self.dim_a * self.dim_b


@dataclass(frozen=True, eq=False)
class PureState:
    dim_a: int
    dim_b: int
    amplitudes: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "amplitudes", _frozen(self.amplitudes))

    def projector(self) -> BipartiteDensity:
        v = self.amplitudes
        return BipartiteDensity(self.dim_a, self.dim_b, np.outer(v, v.conj()))


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues (descending) with eigenvectors stored as columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def _check_square(mat: np.ndarray) -> None:
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise BadDims(f"expected a square matrix, got shape {mat.shape}")
    if not np.all(np.isfinite(mat)):
        raise ValueError("matrix has non-finite entries")


def density_from_matrix(mat, dim_a: int, dim_b: int,
                        tol: Tolerances = DEFAULT_TOLERANCES) -> BipartiteDensity:
    """Validate ``mat`` as a density matrix on ``dim_a x dim_b``.

    Raises
    ------
    BadDims
        If ``mat`` is not square with side ``dim_a * dim_b``.
    NotHermitian, NotUnitTrace, NotPositive
        If the corresponding check fails at the configured tolerance.
    """
    mat = np.asarray(mat, dtype=np.complex128)
    _check_square(mat)
    if dim_a < 1 or dim_b < 1 or mat.shape[0] != dim_a * dim_b:
        raise BadDims(f"matrix side {mat.shape[0]} != {dim_a}*{dim_b}")
    if np.max(np.abs(mat - mat.conj().T)) > tol.herm_tol:
        raise NotHermitian("matrix is not Hermitian")
    tr = np.trace(mat)
    if abs(tr - 1.0) > tol.trace_tol:
        raise NotUnitTrace(f"trace is {tr.real:.3g}, expected 1")
    lo = _eigvalsh(mat).min()
    if lo < -tol.psd_tol:
        raise NotPositive(f"smallest eigenvalue {lo:.3g} is negative")
    return BipartiteDensity(dim_a, dim_b, mat)


def pure_state(amplitudes, dim_a: int, dim_b: int,
               tol: Tolerances = DEFAULT_TOLERANCES) -> PureState:
    amps = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
    if amps.shape[0] != dim_a * dim_b:
        raise BadDims(f"vector length {amps.shape[0]} != {dim_a}*{dim_b}")
    if abs(np.linalg.norm(amps) - 1.0) > tol.norm_tol:
        raise NotNormalized(f"norm is {np.linalg.norm(amps):.6g}")
    return PureState(dim_a, dim_b, amps)


def _eigvalsh(mat: np.ndarray) -> np.ndarray:
    try:
        return np.linalg.eigvalsh(mat)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc


def partial_transpose(rho: BipartiteDensity) -> np.ndarray:
    """Transpose the second subsystem: ``rho[(i,k),(j,l)] -> rho[(i,l),(j,k)]``."""
    return kernels.partial_transpose(rho.mat, rho.dim_a, rho.dim_b)


def hermitian_spectrum(mat, tol: Tolerances = DEFAULT_TOLERANCES) -> Spectrum:
    """Full eigendecomposition with a reproducible ordering and phase.

    Eigenvalues come out descending. Within a degenerate group, vectors are
    ordered by the position of their first nonzero component, and every
    vector is rotated so that component is real and positive.
    """
    mat = np.asarray(mat, dtype=np.complex128)
    _check_square(mat)
    if np.max(np.abs(mat - mat.conj().T), initial=0.0) > tol.herm_tol:
        raise NotHermitian("matrix is not Hermitian")
    try:
        w, v = np.linalg.eigh(mat)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    w = w[::-1]
    v = v[:, ::-1]

    lead = np.argmax(np.abs(v) > 1e-12, axis=0)
    cols = np.arange(v.shape[1])
    phase = v[lead, cols]
    v = v * (np.abs(phase) / phase)[None, :]

    # group near-equal eigenvalues, then sort each group by leading index
    order = []
    start = 0
    for i in range(1, len(w) + 1):
        if i == len(w) or w[start] - w[i] > _TIE_TOL:
            group = list(range(start, i))
            group.sort(key=lambda c: lead[c])
            order.extend(group)
            start = i
    order = np.array(order, dtype=int)
    return Spectrum(w[order].copy(), np.ascontiguousarray(v[:, order]))


def singular_values(mat) -> np.ndarray:
    mat = np.asarray(mat, dtype=np.complex128)
    if mat.size == 0:
        return np.zeros(0)
    try:
        return np.linalg.svd(mat, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc


def partial_trace(rho: BipartiteDensity, keep: int | str = 0) -> np.ndarray:
    """Reduced state on subsystem ``keep`` (0/"a" first, 1/"b" second)."""
    t = rho.mat.reshape(rho.dim_a, rho.dim_b, rho.dim_a, rho.dim_b)
    if keep in (0, "a", "A"):
        return np.einsum("ikjk->ij", t)
    if keep in (1, "b", "B"):
        return np.einsum("kikj->ij", t)
    raise ValueError(f"keep must select subsystem 0 or 1, got {keep!r}")


def purity(rho: BipartiteDensity) -> float:
    # Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
    return float(np.sum(np.abs(rho.mat) ** 2))


def trace_norm(mat) -> float:
    return float(np.sum(singular_values(mat)))


# -- matrix file format ---------------------------------------------------
#
# {"dim_a": 3, "dim_b": 3, "entries": [[[re, im], ...], ...]}
#
# ``entries`` holds dim_a*dim_b rows of dim_a*dim_b [re, im] pairs.

def _parse_entry(raw, row: int, col: int) -> complex:
    if (not isinstance(raw, (list, tuple)) or len(raw) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in raw)):
        raise ParseError(f"entry at row {row}, column {col} must be a [re, im] pair of numbers")
    return complex(float(raw[0]), float(raw[1]))


def parse_matrix_object(obj) -> tuple[np.ndarray, int, int]:
    if not isinstance(obj, dict):
        raise ParseError("matrix file must hold a JSON object")
    try:
        dim_a = obj["dim_a"]
        dim_b = obj["dim_b"]
        rows = obj["entries"]
    except KeyError as exc:
        raise ParseError(f"missing field {exc.args[0]!r}") from None
    for name, val in (("dim_a", dim_a), ("dim_b", dim_b)):
        if not isinstance(val, int) or isinstance(val, bool) or val < 1:
            raise ParseError(f"{name} must be a positive integer")
    n = dim_a * dim_b
    if not isinstance(rows, list) or len(rows) != n:
        raise ParseError(f"entries must be a list of {n} rows")
    mat = np.empty((n, n), dtype=np.complex128)
    for r, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"row {r} must have {n} entries")
        for c, raw in enumerate(row):
            mat[r, c] = _parse_entry(raw, r, c)
    return mat, dim_a, dim_b


def load_matrix_file(path) -> tuple[np.ndarray, int, int]:
    """Read a matrix file; returns ``(mat, dim_a, dim_b)`` without validating physics."""
    text = Path(path).read_text()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return parse_matrix_object(obj)


def save_matrix_file(path, mat, dim_a: int, dim_b: int) -> None:
    mat = np.asarray(mat, dtype=np.complex128)
    entries = [[[float(z.real), float(z.imag)] for z in row] for row in mat]
    Path(path).write_text(json.dumps({"dim_a": dim_a, "dim_b": dim_b, "entries": entries}))
