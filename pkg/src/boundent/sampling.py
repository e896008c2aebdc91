"""Hilbert-Schmidt random states and the bound-entanglement volume experiment."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .bell import LineParams, bell_diagonal, line_spectrum
from .classify import Label, _label, classify_line, negativity
from .concurrence import cqp
from .config import DEFAULT_QP, DEFAULT_TOLERANCES, QpConfig, Tolerances
from .errors import BadDims, BaseNotBoundEntangled, EpsOutOfRange
from .state import BipartiteDensity

__all__ = [
    "REFERENCE_STATE",
    "VolumeConfig",
    "VolumeRecord",
    "substream",
    "hs_random",
    "mix",
    "volume_experiment",
    "summarize",
    "histograms",
]

REFERENCE_STATE = LineParams(-0.092, 0.04, 0.2148)


def _default_eps():
    return tuple(float(x) for x in np.linspace(0.0, 1.0, 201))


@dataclass(frozen=True, kw_only=True)
class VolumeConfig:
    seed: int
    base: LineParams = REFERENCE_STATE
    eps_values: tuple[float, ...] = field(default_factory=_default_eps)
    samples_per_eps: int = 1000
    histogram_bins: int = 50

    def __post_init__(self):
        eps = tuple(float(e) for e in self.eps_values)
        if any(not 0.0 <= e <= 1.0 for e in eps):
            raise EpsOutOfRange("eps values must lie in [0, 1]")
        if list(eps) != sorted(eps):
            raise ValueError("eps values must be ascending")
        if self.samples_per_eps < 1:
            raise ValueError("samples_per_eps must be >= 1")
        if self.histogram_bins < 1:
            raise ValueError("histogram_bins must be >= 1")
        object.__setattr__(self, "eps_values", eps)


@dataclass(frozen=True)
class VolumeRecord:
    eps: float
    sample: int
    cqp: float
    negativity: float
    ppt: bool
    label: Label


def substream(seed: int, *key: int) -> np.random.Generator:
    """Independent Philox stream for ``key`` under ``seed``.

    Streams depend only on ``(seed, key)``, so results do not depend on the
    order or thread in which they are consumed.
    """
    ss = np.random.SeedSequence(seed, spawn_key=tuple(key))
    return np.random.Generator(np.random.Philox(ss))


def hs_random(dim_a: int, dim_b: int, rng) -> BipartiteDensity:
    """Hilbert-Schmidt random density matrix via a square Ginibre matrix.

    ``rng`` is a ``numpy.random.Generator`` or an integer seed.
    """
    if not isinstance(rng, np.random.Generator):
        rng = substream(int(rng))
    n = dim_a * dim_b
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    m = g @ g.conj().T
    m = (m + m.conj().T) / 2
    return BipartiteDensity(dim_a, dim_b, m / np.trace(m).real)


def mix(base: BipartiteDensity, noise: BipartiteDensity, eps: float) -> BipartiteDensity:
    """``(1 - eps) * base + eps * noise``."""
    if (base.dim_a, base.dim_b) != (noise.dim_a, noise.dim_b):
        raise BadDims("base and noise dimensions differ")
    if not 0.0 <= eps <= 1.0:
        raise EpsOutOfRange(f"eps={eps} outside [0, 1]")
    if eps == 0.0:
        return base
    if eps == 1.0:
        return noise
    return BipartiteDensity(base.dim_a, base.dim_b, (1.0 - eps) * base.mat + eps * noise.mat)


def _record(eps, j, rho, cfg, tol) -> VolumeRecord:
    value = cqp(rho, cfg, tol).value
    neg = negativity(rho)
    tag = _label(neg, value, float("nan"), tol).tag
    return VolumeRecord(eps, j, value, neg, neg <= tol.ppt_tol, tag)


def volume_experiment(cfg: VolumeConfig, threads: int = 1, qp: QpConfig = DEFAULT_QP,
                      tol: Tolerances = DEFAULT_TOLERANCES) -> list[VolumeRecord]:
    """Mix the base line state with Hilbert-Schmidt noise over the eps grid.

    The noise for cell ``(i, j)`` comes from ``substream(seed, i, j)`` where
    ``i`` indexes ``eps_values``. Output is ordered by ``(eps, sample)``.
    """
    if classify_line(cfg.base, qp, tol).tag is not Label.BOUND_ENTANGLED:
        raise BaseNotBoundEntangled(f"base state {cfg.base} is not detected as bound entangled")
    base = bell_diagonal(line_spectrum(cfg.base), tol)

    def row(i):
        eps = cfg.eps_values[i]
        out = []
        for j in range(cfg.samples_per_eps):
            noise = hs_random(base.dim_a, base.dim_b, substream(cfg.seed, i, j))
            out.append(_record(eps, j, mix(base, noise, eps), qp, tol))
        return out

    rows = range(len(cfg.eps_values))
    if threads <= 1:
        chunks = [row(i) for i in rows]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(row, rows))
    return [r for chunk in chunks for r in chunk]


def summarize(records: list[VolumeRecord]) -> list[dict]:
    """Per-eps fractions of PPT and bound-entangled samples, in eps order."""
    by_eps: dict[float, list[VolumeRecord]] = {}
    for r in records:
        by_eps.setdefault(r.eps, []).append(r)
    out = []
    for eps, rs in by_eps.items():
        n = len(rs)
        out.append({
            "eps": eps,
            "n": n,
            "frac_ppt": sum(r.ppt for r in rs) / n,
            "frac_bound": sum(r.label is Label.BOUND_ENTANGLED for r in rs) / n,
        })
    return out


def histograms(records: list[VolumeRecord], bins: int) -> list[dict]:
    """Raw per-eps bin counts of cqp and negativity.

    Bin edges are shared across eps values: ``[0, max]`` over all records of
    each quantity, so rows for different eps are directly comparable.
    """
    out = []
    for quantity in ("cqp", "negativity"):
        values = np.array([getattr(r, quantity) for r in records])
        top = float(values.max()) if values.size and values.max() > 0 else 1.0
        edges = np.linspace(0.0, top, bins + 1)
        by_eps: dict[float, list[float]] = {}
        for r in records:
            by_eps.setdefault(r.eps, []).append(getattr(r, quantity))
        for eps, vals in by_eps.items():
            counts, _ = np.histogram(vals, bins=edges)
            for b in range(bins):
                out.append({
                    "eps": eps,
                    "quantity": quantity,
                    "bin_lo": float(edges[b]),
                    "bin_hi": float(edges[b + 1]),
                    "count": int(counts[b]),
                })
    return out
