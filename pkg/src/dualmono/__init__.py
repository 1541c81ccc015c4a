"""Tighter monogamy relations for the S^t and T^t_q entanglement measures.

The eigen-kernel is a cyclic complex Jacobi solver, compiled with Cython when
the extension is available and pure numpy otherwise; ``BACKEND`` says which.
"""
from ._backend import BACKEND
from .errors import ConditionError, DimensionError, DomainError, DualMonoError, InvalidStateError
from .indicators import IndicatorResult, omega_q, tau_t, w_closed_form
from .measures import (
    CONCURRENCE,
    EOF,
    ST_ENTROPY,
    TANGLE,
    MeasureKind,
    MeasureValue,
    concurrence_2q_mixed,
    concurrence_pure,
    f_eof,
    f_ttq,
    g_tsallis,
    h_st,
    measure_2q,
    measure_pure,
    total_entropy_st,
    total_entropy_tq,
    tsallis,
    ttq,
)
from .monogamy import (
    BoundKind,
    BoundReport,
    bound_mj,
    bound_powersum,
    bound_thm_mixed,
    bound_thm_ordered,
    bound_weighted_geo,
    lemma_residual,
    ordering_profile,
    verify,
)
from .qlinalg import hermitian_eigs, partial_trace, psd_sqrt, validate_density
from .sampler import SampleSpec, haar_pure, mixed_2q
from .states import (
    PureState,
    dicke_state,
    example1_state,
    generalized_schmidt_state,
    ghz_state,
    reduced,
    w_state,
)

__version__ = "0.1.0"
