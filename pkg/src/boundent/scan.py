"""Parameter-plane scans of the line and beyond-line families."""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .bell import BeyondLineParams, LineParams
from .classify import ClassLabel, beta_ent, beta_ppt, classify_beyond_line, classify_line
from .config import DEFAULT_QP, DEFAULT_TOLERANCES, QpConfig, Tolerances
from .errors import InvalidRange

__all__ = ["ScanConfig", "ScanCell", "grid_values", "run_scan", "curve_rows"]

FAMILIES = ("Line", "BeyondLine")


def grid_values(start: float, stop: float, step: float) -> np.ndarray:
    """``start, start + step, ...`` up to ``stop``.

    ``stop`` is included when ``(stop - start) / step`` is an integer to
    within 1e-9, so ranges like ``0, 0.3, 0.002`` are not truncated.
    """
    if not step > 0:
        raise InvalidRange(f"step must be positive, got {step}")
    if start > stop:
        raise InvalidRange(f"start {start} exceeds stop {stop}")
    n = math.floor((stop - start) / step + 1e-9) + 1
    return start + step * np.arange(n)


@dataclass(frozen=True)
class ScanConfig:
    family: str
    gamma: float
    alpha_range: tuple[float, float, float]
    beta_range: tuple[float, float, float]
    path: str = "analytic"

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}")
        if self.path not in ("analytic", "generic"):
            raise ValueError("path must be 'analytic' or 'generic'")
        grid_values(*self.alpha_range)
        grid_values(*self.beta_range)

    @property
    def alphas(self) -> np.ndarray:
        return grid_values(*self.alpha_range)

    @property
    def betas(self) -> np.ndarray:
        return grid_values(*self.beta_range)


@dataclass(frozen=True)
class ScanCell:
    alpha: float
    beta: float
    gamma: float
    family: str
    result: ClassLabel


def run_scan(cfg: ScanConfig, threads: int = 1, qp: QpConfig = DEFAULT_QP,
             tol: Tolerances = DEFAULT_TOLERANCES) -> list[ScanCell]:
    """Classify every grid cell; output is alpha-major regardless of ``threads``."""
    if cfg.family == "Line":
        params, fn = LineParams, classify_line
    else:
        params, fn = BeyondLineParams, classify_beyond_line
    betas = [float(b) for b in cfg.betas]

    def row(alpha):
        alpha = float(alpha)
        return [
            ScanCell(alpha, b, cfg.gamma, cfg.family,
                     fn(params(alpha, b, cfg.gamma), qp, tol, path=cfg.path))
            for b in betas
        ]

    if threads <= 1:
        rows = [row(a) for a in cfg.alphas]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(row, cfg.alphas))
    return [c for r in rows for c in r]


def curve_rows(alphas, gamma: float) -> list[tuple]:
    """``(alpha, ent_lo, ent_hi, ppt_lo, ppt_hi)`` for each ``alpha >= 0``; ``None`` where absent."""
    out = []
    for a in alphas:
        a = float(a)
        if a < 0:
            continue
        ent = beta_ent(a, gamma) or (None, None)
        ppt = beta_ppt(a, gamma) or (None, None)
        out.append((a, *ent, *ppt))
    return out
