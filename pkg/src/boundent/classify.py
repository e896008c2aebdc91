"""PPT test, negativity, borderline curves and bound-entanglement labels."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .bell import (
    BeyondLineParams,
    LineParams,
    beyond_line_spectrum,
    bell_diagonal,
    line_spectrum,
    spectrum_is_physical,
)
from .concurrence import cqp, cqp_bell
from .config import DEFAULT_QP, DEFAULT_TOLERANCES, QpConfig, Tolerances
from .errors import BoundentError, NegativeAlpha, NoConvergence
from .state import BipartiteDensity, density_from_matrix, partial_transpose, purity

__all__ = [
    "Label",
    "ClassLabel",
    "negativity",
    "min_pt_eigenvalue",
    "is_ppt",
    "beta_ent",
    "beta_ppt",
    "classify",
    "classify_matrix",
    "classify_line",
    "classify_beyond_line",
]


class Label(enum.Enum):
    UNPHYSICAL = "Unphysical"
    NPT_ENTANGLED = "NptEntangled"
    BOUND_ENTANGLED = "BoundEntangled"
    UNDETECTED = "Undetected"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ClassLabel:
    """Classification of one state.

    ``UNDETECTED`` means the quasi-pure bound vanished on a PPT state; it is
    not a separability certificate. Numbers are NaN for unphysical input.
    """

    tag: Label
    cqp_value: float
    negativity: float
    purity: float = math.nan


def _pt_eigenvalues(rho: BipartiteDensity) -> np.ndarray:
    try:
        return np.linalg.eigvalsh(partial_transpose(rho))
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc


def negativity(rho: BipartiteDensity) -> float:
    """``(||rho^T_B||_1 - 1) / 2``.

    Evaluated as the summed magnitude of the negative eigenvalues of the
    partial transpose, which equals the trace-norm form at unit trace and
    avoids cancellation near zero.
    """
    ev = _pt_eigenvalues(rho)
    return float(0.0 - ev[ev < 0].sum())


def min_pt_eigenvalue(rho: BipartiteDensity) -> float:
    return float(_pt_eigenvalues(rho)[0])


def is_ppt(rho: BipartiteDensity, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    return min_pt_eigenvalue(rho) >= -tol.ppt_tol


def _roots(offset, scale, radicand):
    if radicand < 0:
        return None
    r = 3.0 * math.sqrt(radicand)
    return ((offset - r) / scale, (offset + r) / scale)


def beta_ent(alpha: float, gamma: float) -> tuple[float, float] | None:
    """Ellipse bounding the bound-entangled line states, solved for beta.

    Valid for ``alpha >= 0``; use the alpha/beta exchange symmetry of the line
    family for negative alpha. Returns ``None`` when the vertical line at
    ``alpha`` misses the ellipse.
    """
    if alpha < 0:
        raise NegativeAlpha("beta_ent is defined for alpha >= 0")
    rad = 1 + 6 * alpha - 39 * alpha**2 + 30 * gamma - 102 * alpha * gamma + 33 * gamma**2
    return _roots(5 - 17 * alpha + 19 * gamma, 8.0, rad)


def beta_ppt(alpha: float, gamma: float) -> tuple[float, float] | None:
    """PPT borderline of the line states, solved for beta (``alpha >= 0``)."""
    if alpha < 0:
        raise NegativeAlpha("beta_ppt is defined for alpha >= 0")
    rad = 4 - 12 * alpha - 15 * alpha**2 - 12 * gamma + 66 * alpha * gamma - 15 * gamma**2
    return _roots(-2 + 11 * alpha + 11 * gamma, 16.0, rad)


def _label(neg: float, value: float, pur: float, tol: Tolerances) -> ClassLabel:
    if neg > tol.ppt_tol:
        tag = Label.NPT_ENTANGLED
    elif value > tol.detect_tol:
        tag = Label.BOUND_ENTANGLED
    else:
        tag = Label.UNDETECTED
    return ClassLabel(tag, value, neg, pur)


_UNPHYSICAL = ClassLabel(Label.UNPHYSICAL, math.nan, math.nan, math.nan)


def classify(rho: BipartiteDensity, cfg: QpConfig = DEFAULT_QP,
             tol: Tolerances = DEFAULT_TOLERANCES) -> ClassLabel:
    """Label an already validated state using the generic bound."""
    neg = negativity(rho)
    return _label(neg, cqp(rho, cfg, tol).value, purity(rho), tol)


def classify_matrix(mat, dim_a: int, dim_b: int, cfg: QpConfig = DEFAULT_QP,
                    tol: Tolerances = DEFAULT_TOLERANCES) -> ClassLabel:
    """Validate then classify; matrices failing validation are ``UNPHYSICAL``."""
    try:
        rho = density_from_matrix(mat, dim_a, dim_b, tol)
    except NoConvergence:
        raise
    except (BoundentError, ValueError):
        return _UNPHYSICAL
    return classify(rho, cfg, tol)


def _classify_spectrum(spec, path, cfg, tol) -> ClassLabel:
    if not spectrum_is_physical(spec, tol):
        return _UNPHYSICAL
    rho = bell_diagonal(spec, tol)
    if path == "analytic":
        value = cqp_bell(spec, tol=tol).value
    elif path == "generic":
        value = cqp(rho, cfg, tol).value
    else:
        raise ValueError(f"unknown path {path!r}")
    return _label(negativity(rho), value, purity(rho), tol)


def classify_line(p: LineParams, cfg: QpConfig = DEFAULT_QP,
                  tol: Tolerances = DEFAULT_TOLERANCES, path: str = "analytic",
                  d: int = 3) -> ClassLabel:
    """Classify a line state.

    ``path="analytic"`` uses the closed-form Bell-diagonal bound, whose values
    are half those of ``path="generic"``; the label is the same either way.
    """
    return _classify_spectrum(line_spectrum(p, d), path, cfg, tol)


def classify_beyond_line(p: BeyondLineParams, cfg: QpConfig = DEFAULT_QP,
                         tol: Tolerances = DEFAULT_TOLERANCES, path: str = "analytic",
                         d: int = 3) -> ClassLabel:
    return _classify_spectrum(beyond_line_spectrum(p, d), path, cfg, tol)
