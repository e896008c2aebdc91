"""Numerical tolerances and quasi-pure bound settings."""
from __future__ import annotations

import enum
from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    herm_tol: float = 1e-9
    trace_tol: float = 1e-9
    norm_tol: float = 1e-9
    psd_tol: float = 1e-10
    phys_tol: float = 1e-12
    ppt_tol: float = 1e-10
    detect_tol: float = 1e-10


DEFAULT_TOLERANCES = Tolerances()


class ChiNorm(enum.Enum):
    """Scaling of the auxiliary vector ``chi = A |psi0>|psi0>``.

    ``CONCURRENCE_NORMALIZED`` divides by the concurrence of ``psi0`` so the
    bound is exact on pure states. ``UNIT_CHI`` normalises ``chi`` to length
    one, which rescales every singular value by 1/2.
    """

    UNIT_CHI = "unit"
    CONCURRENCE_NORMALIZED = "concurrence"


@dataclass(frozen=True)
class QpConfig:
    rank_tol: float = 1e-12
    chi_norm: ChiNorm = ChiNorm.CONCURRENCE_NORMALIZED

    def __post_init__(self):
        if not self.rank_tol > 0:
            raise ValueError("rank_tol must be positive")


DEFAULT_QP = QpConfig()
