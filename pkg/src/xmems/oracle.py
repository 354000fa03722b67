"""Independent brute-force verifiers for the compact X-state machinery.

Everything here works on dense matrices and general-purpose eigensolvers,
deliberately ignoring the antidiagonal block structure that the compact
formulas exploit, so agreement between the two routes is evidence rather
than tautology.  Checks are reported as :class:`OracleReport` rows that the
CLI serializes as JSON lines.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .core import (
    PSD_TOLERANCE,
    XState,
    dense_cap,
    partial_trace_single_qubit,
    to_dense,
    validate,
)
from .measures import gm_concurrence, linear_entropy, purity
from .mems import boundary_entropy, corner_weight
from .sampling import SamplerConfig, sample_xstate

_CHUNK = 2048


@dataclass(frozen=True)
class OracleReport:
    check_name: str
    analytic_value: float
    oracle_value: float
    abs_diff: float
    passed: bool

    def to_json(self) -> str:
        return json.dumps(dataclasses.asdict(self), sort_keys=True)


class PsdResult(NamedTuple):
    ok: bool
    min_eigenvalue: float


def _require_square(dense: np.ndarray) -> int:
    if dense.ndim != 2 or dense.shape[0] != dense.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {dense.shape}")
    return dense.shape[0]


def _require_hermitian(dense: np.ndarray, tolerance: float = 1e-12) -> None:
    _require_square(dense)
    if np.abs(dense - dense.conj().T).max() > tolerance:
        raise ValueError("matrix is not Hermitian")


def psd_check(dense: np.ndarray, tolerance: float = PSD_TOLERANCE) -> PsdResult:
    """Positive semidefiniteness by full Hermitian eigendecomposition."""
    _require_hermitian(dense)
    smallest = float(np.linalg.eigvalsh(dense).min())
    return PsdResult(ok=smallest >= -tolerance, min_eigenvalue=smallest)


def dense_purity(dense: np.ndarray) -> float:
    """Tr(rho^2) by explicit matrix product."""
    _require_square(dense)
    return float(np.trace(dense @ dense).real)


def dense_linear_entropy(dense: np.ndarray) -> float:
    d = _require_square(dense)
    return d / (d - 1.0) * (1.0 - dense_purity(dense))


# Two-qubit spin-flip in the all-ones-first basis; the matrix is symmetric
# under reversing the basis order, so no relabeling is needed.
_SPIN_FLIP = np.zeros((4, 4))
_SPIN_FLIP[0, 3] = _SPIN_FLIP[3, 0] = -1.0
_SPIN_FLIP[1, 2] = _SPIN_FLIP[2, 1] = 1.0


def wootters_concurrence(dense: np.ndarray) -> float:
    """Exact two-qubit concurrence from the spin-flipped eigenvalue method.

    C = max(0, l1 - l2 - l3 - l4) where the l's are the decreasingly sorted
    square roots of the eigenvalues of rho (sigma_y x sigma_y) rho* (sigma_y
    x sigma_y).
    """
    if dense.shape != (4, 4):
        raise ValueError(
            f"Wootters concurrence needs a two-qubit 4x4 density matrix, got {dense.shape}"
        )
    flipped = _SPIN_FLIP @ dense.conj() @ _SPIN_FLIP
    eigs = np.linalg.eigvals(dense @ flipped).real
    lam = np.sqrt(np.clip(np.sort(eigs)[::-1], 0.0, None))
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def dense_partial_trace(dense: np.ndarray, n_qubits: int, qubit_index: int) -> np.ndarray:
    """Reduced density matrix after tracing out one qubit of a dense state.

    Works for arbitrary dense matrices; row ordering follows the same
    all-ones-first convention as :func:`xmems.core.to_dense`, under which the
    traced qubit is simply the ``qubit_index``-th binary digit (most
    significant first) of the row index.
    """
    d = _require_square(dense)
    if d != 1 << n_qubits:
        raise ValueError(f"matrix of dim {d} does not match n_qubits={n_qubits}")
    if not 0 <= qubit_index < n_qubits:
        raise IndexError(f"qubit_index must be in [0, {n_qubits}), got {qubit_index}")
    tensor = dense.reshape((2,) * (2 * n_qubits))
    reduced = np.trace(tensor, axis1=qubit_index, axis2=n_qubits + qubit_index)
    half = d >> 1
    return reduced.reshape(half, half)


def _family_entropy_dense(n_qubits: int, coherence_abs: float, diag: np.ndarray) -> np.ndarray:
    """Linear entropy of single-coherence states, via batched dense products.

    ``diag`` has one full 2^N diagonal per row; the only off-diagonal entries
    are the corner coherence and its conjugate.
    """
    d = 1 << n_qubits
    scale = d / (d - 1.0)
    rows = np.arange(d)
    out = np.empty(diag.shape[0])
    for start in range(0, diag.shape[0], _CHUNK):
        block = diag[start : start + _CHUNK]
        dense = np.zeros((block.shape[0], d, d), dtype=np.complex128)
        dense[:, rows, rows] = block
        dense[:, 0, d - 1] = coherence_abs
        dense[:, d - 1, 0] = coherence_abs
        pur = np.einsum("mij,mji->m", dense, dense).real
        out[start : start + _CHUNK] = scale * (1.0 - pur)
    return out


@lru_cache(maxsize=32)
def _simplex_grid(cells: int, resolution: int) -> np.ndarray:
    """All compositions of ``resolution`` into ``cells`` parts, as fractions."""
    rows: list[list[int]] = []

    def rec(prefix: list[int], remaining: int, left: int) -> None:
        if left == 1:
            rows.append(prefix + [remaining])
            return
        for k in range(remaining + 1):
            rec(prefix + [k], remaining - k, left - 1)

    rec([], resolution, cells)
    grid = np.asarray(rows, dtype=np.float64) / resolution
    grid.flags.writeable = False
    return grid


_MULTID_RESOLUTION = {2: 40, 3: 20}


def mems_grid_verify(
    n_qubits: int,
    coherence_abs: float,
    grid_points: int = 10_001,
    multid_resolution: int | None = None,
) -> list[OracleReport]:
    """Grid-search the entropy maximum at fixed coherence and compare it
    against the analytic optimum.

    Produces a report for the 1-D maximum over the equal-population family
    (value and argmax, each required to sit within grid resolution of the
    closed form) and, for N <= 3, a report for the full unequal-population
    simplex grid, whose content is one-sided: no composition of diagonal
    weights may beat the equal-population answer.
    """
    if grid_points < 100:
        raise ValueError(f"grid_points must be at least 100, got {grid_points}")
    if not 0.0 <= coherence_abs <= 0.5:
        raise ValueError(f"coherence magnitude must lie in [0, 1/2], got {coherence_abs}")
    d = 1 << n_qubits
    n = d >> 1
    scale = d / (d - 1.0)

    corner_grid = np.linspace(coherence_abs, 0.5, grid_points)
    diag = np.zeros((grid_points, d))
    diag[:, 0] = corner_grid
    diag[:, d - 1] = corner_grid
    diag[:, 1:n] = ((1.0 - 2.0 * corner_grid) / (n - 1))[:, None]
    entropies = _family_entropy_dense(n_qubits, coherence_abs, diag)
    best = int(np.argmax(entropies))
    grid_max = float(entropies[best])
    grid_arg = float(corner_grid[best])

    analytic_max = boundary_entropy(n_qubits, coherence_abs)
    analytic_arg = corner_weight(n_qubits, coherence_abs)
    step = (0.5 - coherence_abs) / (grid_points - 1)
    curvature = 2.0 * scale * (n + 1) / (n - 1)
    value_tol = max(4.0 * curvature * step**2, 1e-9)

    tag = f"(n_qubits={n_qubits},coherence={coherence_abs:g})"
    value_diff = analytic_max - grid_max
    reports = [
        OracleReport(
            check_name=f"mems_grid_value{tag}",
            analytic_value=analytic_max,
            oracle_value=grid_max,
            abs_diff=abs(value_diff),
            passed=bool(-1e-9 <= value_diff <= value_tol),
        ),
        OracleReport(
            check_name=f"mems_grid_argmax{tag}",
            analytic_value=analytic_arg,
            oracle_value=grid_arg,
            abs_diff=abs(grid_arg - analytic_arg),
            passed=bool(abs(grid_arg - analytic_arg) <= step + 1e-12),
        ),
    ]

    if n_qubits in _MULTID_RESOLUTION or multid_resolution is not None:
        resolution = multid_resolution or _MULTID_RESOLUTION.get(n_qubits, 12)
        if resolution % 2:
            raise ValueError("multid_resolution must be even so the pure corner is on-grid")
        simplex = _simplex_grid(n + 1, resolution)
        feasible = simplex[:, 0] * simplex[:, 1] >= coherence_abs**2 * (1.0 - 1e-12)
        weights = simplex[feasible]
        diag = np.zeros((weights.shape[0], d))
        diag[:, 0] = weights[:, 0]
        diag[:, d - 1] = weights[:, 1]
        diag[:, 1:n] = weights[:, 2:]
        multid_max = float(np.max(_family_entropy_dense(n_qubits, coherence_abs, diag)))
        multid_diff = analytic_max - multid_max
        reports.append(
            OracleReport(
                check_name=f"mems_grid_multid{tag}",
                analytic_value=analytic_max,
                oracle_value=multid_max,
                abs_diff=abs(multid_diff),
                passed=bool(-1e-9 <= multid_diff <= 3.0 / resolution),
            )
        )
    return reports


def run_oracle_suite(
    n_qubits: int,
    count: int,
    master_seed: int,
    grid_points: int = 2001,
    mems_coherences: tuple[float, ...] = (0.0, 0.1, 0.25, 0.4, 0.5),
) -> list[OracleReport]:
    """Run every dense-side check on a fresh seeded corpus.

    Raises ``ValueError`` when ``n_qubits`` exceeds the dense cap, since all
    checks here require the dense expansion.
    """
    cap = dense_cap()
    if n_qubits > cap:
        raise ValueError(
            f"n_qubits={n_qubits} exceeds the dense cap ({cap}) required for oracle checks"
        )
    config = SamplerConfig(n_qubits=n_qubits, count=count, master_seed=master_seed)

    purity_worst = (0.0, 0.0, -1.0)  # (analytic, oracle, diff)
    entropy_worst = (0.0, 0.0, -1.0)
    wootters_worst = (0.0, 0.0, -1.0)
    agreement = 0
    offdiag_max = 0.0
    diag_mismatch = 0.0

    for index in range(count):
        state = sample_xstate(config, index)
        dense = to_dense(state)

        p_compact = purity(state)
        p_dense = dense_purity(dense)
        if abs(p_compact - p_dense) > purity_worst[2]:
            purity_worst = (p_compact, p_dense, abs(p_compact - p_dense))

        s_compact = linear_entropy(state)
        s_dense = dense_linear_entropy(dense)
        if abs(s_compact - s_dense) > entropy_worst[2]:
            entropy_worst = (s_compact, s_dense, abs(s_compact - s_dense))

        if validate(state).ok == psd_check(dense).ok:
            agreement += 1

        for qubit in range(n_qubits):
            reduced = dense_partial_trace(dense, n_qubits, qubit)
            off = reduced - np.diag(np.diag(reduced))
            offdiag_max = max(offdiag_max, float(np.abs(off).max()))
            compact_diag = partial_trace_single_qubit(state, qubit)
            diag_mismatch = max(
                diag_mismatch, float(np.abs(np.diag(reduced).real - compact_diag).max())
            )

        if n_qubits == 2:
            c_analytic = gm_concurrence(state).value
            c_oracle = wootters_concurrence(dense)
            if abs(c_analytic - c_oracle) > wootters_worst[2]:
                wootters_worst = (c_analytic, c_oracle, abs(c_analytic - c_oracle))

    reports = [
        OracleReport(
            "purity_dense_agreement",
            purity_worst[0],
            purity_worst[1],
            purity_worst[2],
            bool(purity_worst[2] <= 1e-12),
        ),
        OracleReport(
            "entropy_dense_agreement",
            entropy_worst[0],
            entropy_worst[1],
            entropy_worst[2],
            bool(entropy_worst[2] <= 1e-12),
        ),
        OracleReport(
            "validation_psd_agreement",
            1.0,
            agreement / count,
            1.0 - agreement / count,
            bool(agreement == count),
        ),
        OracleReport(
            "reduced_state_offdiag", 0.0, offdiag_max, offdiag_max, bool(offdiag_max <= 1e-12)
        ),
        OracleReport(
            "reduced_state_diagonal_match",
            0.0,
            diag_mismatch,
            diag_mismatch,
            bool(diag_mismatch <= 1e-12),
        ),
    ]
    if n_qubits == 2:
        reports.append(
            OracleReport(
                "wootters_agreement",
                wootters_worst[0],
                wootters_worst[1],
                wootters_worst[2],
                bool(wootters_worst[2] <= 1e-9),
            )
        )
    for coherence_abs in mems_coherences:
        reports.extend(mems_grid_verify(n_qubits, coherence_abs, grid_points=grid_points))
    return reports
