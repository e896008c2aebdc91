"""Weyl operators, generalized Bell states and Bell-diagonal families."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import IndexOutOfRange, NotPhysical
from .state import BipartiteDensity, PureState

__all__ = [
    "BellIndex",
    "BellSpectrum",
    "LineParams",
    "BeyondLineParams",
    "weyl",
    "bell_state",
    "bell_basis",
    "bell_diagonal",
    "line_spectrum",
    "beyond_line_spectrum",
    "spectrum_is_physical",
    "dominant_index",
]


class BellIndex(NamedTuple):
    k: int
    l: int


@dataclass(frozen=True, eq=False)
class BellSpectrum:
    """Weights ``lam[k, l]`` of the Bell projectors ``P_kl``."""

    lam: np.ndarray

    def __post_init__(self):
        lam = np.array(self.lam, dtype=np.float64, copy=True)
        if lam.ndim != 2 or lam.shape[0] != lam.shape[1] or lam.shape[0] < 2:
            raise ValueError(f"Bell spectrum must be a d x d grid with d >= 2, got {lam.shape}")
        lam.setflags(write=False)
        object.__setattr__(self, "lam", lam)

    @property
    def d(self) -> int:
        return self.lam.shape[0]


@dataclass(frozen=True)
class LineParams:
    alpha: float
    beta: float
    gamma: float


@dataclass(frozen=True)
class BeyondLineParams:
    alpha: float
    beta: float
    gamma: float


def _check_index(d: int, k: int, l: int) -> None:
    if not (0 <= k < d and 0 <= l < d):
        raise IndexOutOfRange(f"Bell index ({k}, {l}) outside [0, {d})")


def weyl(d: int, k: int, l: int) -> np.ndarray:
    """``W_kl = sum_s exp(2 pi i s k / d) |s><s+l|``."""
    _check_index(d, k, l)
    w = np.zeros((d, d), dtype=np.complex128)
    s = np.arange(d)
    w[s, (s + l) % d] = np.exp(2j * np.pi * s * k / d)
    return w


def bell_state(d: int, k: int, l: int) -> PureState:
    _check_index(d, k, l)
    amps = np.zeros(d * d, dtype=np.complex128)
    s = np.arange(d)
    amps[s * d + (s + l) % d] = np.exp(2j * np.pi * s * k / d) / np.sqrt(d)
    return PureState(d, d, amps)


def bell_basis(d: int) -> np.ndarray:
    """Columns are ``|Omega_kl>`` in the order ``k * d + l``."""
    return np.stack([bell_state(d, k, l).amplitudes for k in range(d) for l in range(d)], axis=1)


_BASIS_CACHE: dict[int, np.ndarray] = {}


def _cached_basis(d: int) -> np.ndarray:
    basis = _BASIS_CACHE.get(d)
    if basis is None:
        basis = bell_basis(d)
        basis.setflags(write=False)
        _BASIS_CACHE[d] = basis
    return basis


def spectrum_is_physical(spec: BellSpectrum, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    lam = spec.lam
    return bool(lam.min() >= -tol.phys_tol and abs(lam.sum() - 1.0) <= tol.trace_tol)


def _require_physical(spec: BellSpectrum, tol: Tolerances) -> None:
    if not spectrum_is_physical(spec, tol):
        raise NotPhysical(
            f"Bell spectrum not physical (min {spec.lam.min():.3g}, sum {spec.lam.sum():.12g})"
        )


def bell_diagonal(spec: BellSpectrum, tol: Tolerances = DEFAULT_TOLERANCES) -> BipartiteDensity:
    """``rho = sum_kl lam_kl |Omega_kl><Omega_kl|``."""
    _require_physical(spec, tol)
    basis = _cached_basis(spec.d)
    w = spec.lam.reshape(-1)
    mat = (basis * w) @ basis.conj().T
    return BipartiteDensity(spec.d, spec.d, mat)


def _family(alpha, beta, gamma, d, beta_at) -> BellSpectrum:
    lam = np.full((d, d), (1.0 - alpha - beta - gamma) / d**2)
    lam[0, 0] += gamma
    lam[1, 0] += alpha
    lam[beta_at] += beta
    return BellSpectrum(lam)


def line_spectrum(p: LineParams, d: int = 3) -> BellSpectrum:
    """Weights on P_00, P_10, P_20 over the maximally mixed state.

    No physicality check; see :func:`spectrum_is_physical`.
    """
    if d < 3:
        raise ValueError("line states need d >= 3 (P_20 must differ from P_00)")
    return _family(p.alpha, p.beta, p.gamma, d, (2, 0))


def beyond_line_spectrum(p: BeyondLineParams, d: int = 3) -> BellSpectrum:
    """Like :func:`line_spectrum` but the ``beta`` weight sits on P_01."""
    return _family(p.alpha, p.beta, p.gamma, d, (0, 1))


def dominant_index(spec: BellSpectrum, tol: Tolerances = DEFAULT_TOLERANCES) -> BellIndex:
    """Index of the largest weight; ties go to the lexicographically first."""
    _require_physical(spec, tol)
    flat = int(np.argmax(spec.lam))  # argmax returns the first maximum in row-major order
    return BellIndex(*divmod(flat, spec.d))
