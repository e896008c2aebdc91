"""Bound-entanglement detection for bipartite qudits via the quasi-pure concurrence bound."""
from .bell import (
    BellIndex,
    BellSpectrum,
    BeyondLineParams,
    LineParams,
    bell_diagonal,
    bell_state,
    beyond_line_spectrum,
    dominant_index,
    line_spectrum,
    spectrum_is_physical,
    weyl,
)
from .classify import (
    ClassLabel,
    Label,
    beta_ent,
    beta_ppt,
    classify,
    classify_beyond_line,
    classify_line,
    classify_matrix,
    is_ppt,
    negativity,
)
from .concurrence import (
    QpReport,
    a_expectation,
    bell_singular,
    chi_vector,
    cqp,
    cqp_bell,
    pure_concurrence,
    qp_matrix,
    wootters_concurrence,
)
from .config import ChiNorm, QpConfig, Tolerances
from .kernels import BACKEND
from .sampling import REFERENCE_STATE, VolumeConfig, VolumeRecord, hs_random, mix, volume_experiment
from .state import (
    BipartiteDensity,
    PureState,
    Spectrum,
    density_from_matrix,
    hermitian_spectrum,
    partial_trace,
    partial_transpose,
    pure_state,
    purity,
    singular_values,
    trace_norm,
)

__version__ = "0.1.0"
