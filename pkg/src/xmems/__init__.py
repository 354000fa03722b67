"""Entanglement-entropy analysis of N-qubit X-form density matrices.

The package provides a compact representation of X-form states, closed-form
purity, linear entropy, and genuine multipartite concurrence, the maximally
entangled mixed X-state family with its boundary curve and critical entropy,
a seeded Monte Carlo sweep of the entanglement-entropy plane, and a dense
brute-force oracle validating every closed form.
"""

from .core import (
    DEFAULT_DENSE_CAP,
    DEFAULT_TOLERANCE,
    MAX_COMPACT_QUBITS,
    PSD_TOLERANCE,
    StateJsonError,
    ValidationReport,
    Violation,
    XState,
    dense_cap,
    diagonal_of,
    ghz_state,
    maximally_mixed_state,
    partial_trace_single_qubit,
    to_dense,
    validate,
)
from .measures import GmConcurrence, MeasurePair, gm_concurrence, linear_entropy, measure, purity
from .mems import (
    BoundaryCoefficients,
    EntropyRaisingResult,
    MemsPoint,
    boundary_coefficients,
    boundary_entropy,
    corner_weight,
    critical_entropy,
    critical_entropy_fraction,
    entropy_raising_transform,
    entropy_vs_diagonal_curve,
    interior_weight,
    mems_state,
)
from .oracle import (
    OracleReport,
    PsdResult,
    dense_linear_entropy,
    dense_partial_trace,
    dense_purity,
    mems_grid_verify,
    psd_check,
    run_oracle_suite,
    wootters_concurrence,
)
from .sampling import (
    SWEEP_CSV_HEADER,
    SamplerConfig,
    SweepRecord,
    format_sweep_record,
    sample_entangled_xstate,
    sample_xstate,
    shard_range,
    sweep,
    write_sweep_csv,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_DENSE_CAP",
    "DEFAULT_TOLERANCE",
    "MAX_COMPACT_QUBITS",
    "PSD_TOLERANCE",
    "BoundaryCoefficients",
    "EntropyRaisingResult",
    "GmConcurrence",
    "MeasurePair",
    "MemsPoint",
    "OracleReport",
    "PsdResult",
    "SWEEP_CSV_HEADER",
    "SamplerConfig",
    "StateJsonError",
    "SweepRecord",
    "ValidationReport",
    "Violation",
    "XState",
    "boundary_coefficients",
    "boundary_entropy",
    "corner_weight",
    "critical_entropy",
    "critical_entropy_fraction",
    "dense_cap",
    "dense_linear_entropy",
    "dense_partial_trace",
    "dense_purity",
    "diagonal_of",
    "entropy_raising_transform",
    "entropy_vs_diagonal_curve",
    "format_sweep_record",
    "ghz_state",
    "gm_concurrence",
    "interior_weight",
    "linear_entropy",
    "maximally_mixed_state",
    "measure",
    "mems_grid_verify",
    "mems_state",
    "partial_trace_single_qubit",
    "psd_check",
    "purity",
    "run_oracle_suite",
    "sample_entangled_xstate",
    "sample_xstate",
    "shard_range",
    "sweep",
    "to_dense",
    "validate",
    "wootters_concurrence",
    "write_sweep_csv",
]
