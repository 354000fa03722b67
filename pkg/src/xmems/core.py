"""Compact representation and dense realization of N-qubit X-form density matrices.

An X-form density matrix, written in the product basis ordered
|1,1,...,1>, |1,1,...,1,0>, ..., |0,0,...,0>, has nonzero entries only on the
main diagonal and the antidiagonal.  With n = 2^(N-1), the upper half of the
diagonal holds a_1..a_n, the lower half holds b_n..b_1 (b_1 sits at the
bottom-right corner, so a_i and b_i face each other across the antidiagonal),
and the upper antidiagonal holds z_1..z_n with conjugates mirrored below.

Such a matrix is a physical state exactly when every a_i and b_i is
nonnegative, the diagonal sums to one, and |z_i| <= sqrt(a_i * b_i) for every
block.  These three compact conditions are equivalent to the dense matrix
being positive semidefinite with unit trace, which the oracle module verifies
by brute force.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass

import numpy as np

#: Default tolerance for the compact physicality checks.
DEFAULT_TOLERANCE = 1e-12

#: Default tolerance for dense eigenvalue positivity (eigensolvers are less exact).
PSD_TOLERANCE = 1e-10

#: Largest qubit count expanded to a dense matrix unless overridden.
DEFAULT_DENSE_CAP = 12

#: Environment variable overriding the dense cap.
DENSE_CAP_ENV = "XMEMS_DENSE_CAP"

#: Memory guard for the compact representation (vector length 2^23 at 24 qubits).
MAX_COMPACT_QUBITS = 24


def dense_cap() -> int:
    """Current dense-expansion qubit cap, honoring the env override."""
    return int(os.environ.get(DENSE_CAP_ENV, DEFAULT_DENSE_CAP))


class StateJsonError(ValueError):
    """A state JSON document violates the schema (wrong keys, lengths, or values)."""


@dataclass(frozen=True, eq=False)
class XState:
    """An N-qubit X-form density matrix stored as three length-2^(N-1) vectors.

    Parameters
    ----------
    n_qubits : int
        Number of qubits N, between 2 and ``MAX_COMPACT_QUBITS``.
    a, b : array_like of float
        Upper and lower halves of the main diagonal.  ``b`` is stored so that
        ``b[i]`` is the diagonal entry facing ``a[i]`` across the antidiagonal
        (``b[0]`` is the bottom-right corner).
    z : array_like of complex
        Upper antidiagonal entries; the lower antidiagonal is their conjugate.

    Construction only enforces structure (finite entries, matching lengths).
    Physicality is checked separately by :func:`validate`, so intentionally
    unphysical states can be built for testing.
    """

    n_qubits: int
    a: np.ndarray
    b: np.ndarray
    z: np.ndarray

    def __post_init__(self) -> None:
        n_qubits = int(self.n_qubits)
        if n_qubits < 2:
            raise ValueError(f"n_qubits must be at least 2, got {n_qubits}")
        if n_qubits > MAX_COMPACT_QUBITS:
            raise ValueError(
                f"n_qubits={n_qubits} exceeds the compact memory guard "
                f"({MAX_COMPACT_QUBITS} qubits)"
            )
        a = np.array(self.a, dtype=np.float64, copy=True)
        b = np.array(self.b, dtype=np.float64, copy=True)
        z = np.array(self.z, dtype=np.complex128, copy=True)
        n = 1 << (n_qubits - 1)
        for name, vec in (("a", a), ("b", b), ("z", z)):
            if vec.shape != (n,):
                raise ValueError(
                    f"vector {name} must have length {n} = 2^(N-1), got shape {vec.shape}"
                )
            if not np.isfinite(vec).all():
                raise ValueError(f"vector {name} contains non-finite entries")
            vec.flags.writeable = False
        object.__setattr__(self, "n_qubits", n_qubits)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "z", z)

    @classmethod
    def _from_trusted_arrays(
        cls, n_qubits: int, a: np.ndarray, b: np.ndarray, z: np.ndarray
    ) -> "XState":
        # fast path for internal callers that own freshly built arrays of the
        # right dtype and length; skips the copying and finiteness checks
        state = object.__new__(cls)
        for vec in (a, b, z):
            vec.flags.writeable = False
        object.__setattr__(state, "n_qubits", n_qubits)
        object.__setattr__(state, "a", a)
        object.__setattr__(state, "b", b)
        object.__setattr__(state, "z", z)
        return state

    @property
    def block_count(self) -> int:
        """Number of antidiagonal 2x2 blocks, n = 2^(N-1)."""
        return self.a.size

    @property
    def dim(self) -> int:
        """Dense dimension d = 2^N."""
        return 1 << self.n_qubits

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, XState):
            return NotImplemented
        return (
            self.n_qubits == other.n_qubits
            and np.array_equal(self.a, other.a)
            and np.array_equal(self.b, other.b)
            and np.array_equal(self.z, other.z)
        )

    __hash__ = None  # type: ignore[assignment]

    def to_dict(self) -> dict:
        """Plain-data form matching the JSON state schema."""
        return {
            "n_qubits": self.n_qubits,
            "a": [float(x) for x in self.a],
            "b": [float(x) for x in self.b],
            "z": [[float(w.real), float(w.imag)] for w in self.z],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, obj: object) -> "XState":
        """Strictly parse the JSON state schema; reject anything malformed."""
        if not isinstance(obj, dict):
            raise StateJsonError("top-level value must be an object")
        expected = {"n_qubits", "a", "b", "z"}
        keys = set(obj)
        if keys != expected:
            missing = sorted(expected - keys)
            extra = sorted(keys - expected)
            parts = []
            if missing:
                parts.append(f"missing keys {missing}")
            if extra:
                parts.append(f"unexpected keys {extra}")
            raise StateJsonError("; ".join(parts))
        n_qubits = obj["n_qubits"]
        if isinstance(n_qubits, bool) or not isinstance(n_qubits, int):
            raise StateJsonError("field 'n_qubits': must be an integer")
        if not 2 <= n_qubits <= MAX_COMPACT_QUBITS:
            raise StateJsonError(
                f"field 'n_qubits': must be between 2 and {MAX_COMPACT_QUBITS}, got {n_qubits}"
            )
        n = 1 << (n_qubits - 1)
        a = _parse_real_vector(obj["a"], "a", n)
        b = _parse_real_vector(obj["b"], "b", n)
        z = _parse_complex_vector(obj["z"], "z", n)
        return cls(n_qubits, a, b, z)

    @classmethod
    def from_json(cls, text: str) -> "XState":
        return cls.from_dict(json.loads(text))


def _parse_real_vector(value: object, name: str, n: int) -> np.ndarray:
    if not isinstance(value, list):
        raise StateJsonError(f"field '{name}': must be a list of numbers")
    if len(value) != n:
        raise StateJsonError(f"field '{name}': expected {n} entries, got {len(value)}")
    out = np.empty(n)
    for i, entry in enumerate(value):
        if isinstance(entry, bool) or not isinstance(entry, (int, float)):
            raise StateJsonError(f"field '{name}'[{i}]: must be a number")
        x = float(entry)
        if not np.isfinite(x):
            raise StateJsonError(f"field '{name}'[{i}]: non-finite value")
        out[i] = x
    return out


def _parse_complex_vector(value: object, name: str, n: int) -> np.ndarray:
    if not isinstance(value, list):
        raise StateJsonError(f"field '{name}': must be a list of [re, im] pairs")
    if len(value) != n:
        raise StateJsonError(f"field '{name}': expected {n} entries, got {len(value)}")
    out = np.empty(n, dtype=np.complex128)
    for i, entry in enumerate(value):
        if not isinstance(entry, list) or len(entry) != 2:
            raise StateJsonError(f"field '{name}'[{i}]: must be an [re, im] pair")
        parts = []
        for part in entry:
            if isinstance(part, bool) or not isinstance(part, (int, float)):
                raise StateJsonError(f"field '{name}'[{i}]: must contain numbers")
            x = float(part)
            if not np.isfinite(x):
                raise StateJsonError(f"field '{name}'[{i}]: non-finite value")
            parts.append(x)
        out[i] = complex(parts[0], parts[1])
    return out


def ghz_state(n_qubits: int) -> XState:
    """The N-qubit GHZ state: a_1 = b_1 = z_1 = 1/2, everything else zero."""
    n = 1 << (n_qubits - 1)
    a = np.zeros(n)
    b = np.zeros(n)
    z = np.zeros(n, dtype=np.complex128)
    a[0] = b[0] = 0.5
    z[0] = 0.5
    return XState(n_qubits, a, b, z)


def maximally_mixed_state(n_qubits: int) -> XState:
    """The maximally mixed N-qubit state, identity over 2^N."""
    n = 1 << (n_qubits - 1)
    w = 1.0 / (2.0 * n)
    return XState(n_qubits, np.full(n, w), np.full(n, w), np.zeros(n, dtype=np.complex128))


@dataclass(frozen=True)
class Violation:
    """One violated physicality condition.

    ``condition`` is one of ``a_nonneg``, ``b_nonneg``, ``trace``,
    ``offdiag_bound``; ``index`` is the 1-based block index (0 for the trace);
    ``magnitude`` is the amount by which the condition fails.
    """

    condition: str
    index: int
    magnitude: float


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...] = ()


def validate(state: XState, tolerance: float = DEFAULT_TOLERANCE) -> ValidationReport:
    """Check the three compact physicality conditions within ``tolerance``.

    Nonnegative diagonals, unit trace, and the per-block off-diagonal bound
    |z_i| <= sqrt(a_i * b_i) are each reported separately with the index and
    magnitude of every violation.  Together they are equivalent to the dense
    matrix being positive semidefinite with unit trace.

    The trace is accumulated exactly (math.fsum), so a tolerance of zero is
    meaningful: samplers can construct states that pass it.
    """
    if tolerance < 0:
        raise ValueError("tolerance must be nonnegative")
    violations: list[Violation] = []
    for i in np.flatnonzero(state.a < -tolerance):
        violations.append(Violation("a_nonneg", int(i) + 1, float(-state.a[i])))
    for i in np.flatnonzero(state.b < -tolerance):
        violations.append(Violation("b_nonneg", int(i) + 1, float(-state.b[i])))
    trace = math.fsum(state.a.tolist() + state.b.tolist())
    if abs(trace - 1.0) > tolerance:
        violations.append(Violation("trace", 0, abs(trace - 1.0)))
    ceiling = np.sqrt(np.clip(state.a * state.b, 0.0, None))
    excess = np.abs(state.z) - ceiling
    for i in np.flatnonzero(excess > tolerance):
        violations.append(Violation("offdiag_bound", int(i) + 1, float(excess[i])))
    return ValidationReport(ok=not violations, violations=tuple(violations))


def to_dense(state: XState, cap: int | None = None) -> np.ndarray:
    """Expand the compact vectors to the full 2^N x 2^N complex matrix.

    Row ordering follows the all-ones-first basis convention, so row 0 is
    |1,1,...,1> and row 2^N - 1 is |0,0,...,0>.  Refuses to allocate beyond
    ``cap`` qubits (default :func:`dense_cap`).
    """
    limit = dense_cap() if cap is None else cap
    if state.n_qubits > limit:
        raise ValueError(
            f"n_qubits={state.n_qubits} exceeds the dense cap ({limit}); "
            f"raise it via the {DENSE_CAP_ENV} environment variable if intended"
        )
    d = state.dim
    n = state.block_count
    dense = np.zeros((d, d), dtype=np.complex128)
    idx = np.arange(n)
    dense[idx, idx] = state.a
    dense[d - 1 - idx, d - 1 - idx] = state.b
    dense[idx, d - 1 - idx] = state.z
    dense[d - 1 - idx, idx] = state.z.conj()
    return dense


def diagonal_of(state: XState) -> np.ndarray:
    """Main diagonal of the dense matrix in row order, without expanding it."""
    return np.concatenate([state.a, state.b[::-1]])


def partial_trace_single_qubit(state: XState, qubit_index: int) -> np.ndarray:
    """Diagonal of the reduced state after tracing out one qubit.

    Tracing any single qubit out of an X-form matrix kills every antidiagonal
    element (row and column of each antidiagonal pair differ in all N bits, so
    they never share the traced qubit's value), leaving a diagonal and hence
    separable reduced state.  This returns that diagonal, in the same
    all-ones-first ordering induced on the remaining N-1 qubits.

    Qubit 0 is the most significant label in the basis ordering.
    """
    n_qubits = state.n_qubits
    if not 0 <= qubit_index < n_qubits:
        raise IndexError(f"qubit_index must be in [0, {n_qubits}), got {qubit_index}")
    full_diag = diagonal_of(state)
    d = state.dim
    n_rest = d >> 1
    # Reduced row k labels the ket with bits of (n_rest - 1 - k); insert the
    # traced qubit's bit to recover the two contributing full rows.
    kets_rest = (n_rest - 1) - np.arange(n_rest)
    bit = n_qubits - 1 - qubit_index
    high = kets_rest >> bit
    low = kets_rest & ((1 << bit) - 1)
    reduced = np.zeros(n_rest)
    for traced_bit in (0, 1):
        kets_full = (high << (bit + 1)) | (traced_bit << bit) | low
        reduced += full_diag[(d - 1) - kets_full]
    return reduced
