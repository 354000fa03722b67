"""Maximally entangled mixed X-states and the entanglement-entropy boundary.

Within the X-form family there is a sharp trade-off between genuine
multipartite concurrence and linear entropy.  This module implements

* an entropy-raising rewrite that preserves concurrence, showing the
  extremal states keep a single coherent block;
* the one-parameter extremal family itself (``mems_state``), reaching the
  maximum entropy at every concurrence value;
* the resulting boundary curve (``boundary_entropy``) and the critical
  entropy above which no X-state is genuinely entangled
  (``critical_entropy``).

The family is parametrized by the corner coherence, the single surviving
antidiagonal element; its magnitude is half the concurrence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .core import XState
from .measures import gm_concurrence


def _check_n_qubits(n_qubits: int) -> int:
    n_qubits = int(n_qubits)
    if n_qubits < 2:
        raise ValueError(f"n_qubits must be at least 2, got {n_qubits}")
    return n_qubits


def _check_coherence_abs(coherence_abs: float) -> float:
    coherence_abs = float(coherence_abs)
    if not 0.0 <= coherence_abs <= 0.5:
        raise ValueError(f"coherence magnitude must lie in [0, 1/2], got {coherence_abs}")
    return coherence_abs


@dataclass(frozen=True)
class BoundaryCoefficients:
    """Coefficients of the downward parabola giving entropy on the extremal family.

    With v the shared corner diagonal weight, the linear entropy is
    (d / (d - 1)) * (quadratic * v^2 + linear * v + constant).  The quadratic
    coefficient is negative for every N >= 2, so the parabola opens downward
    and its vertex sits at v = 1 / (n + 1).
    """

    quadratic: float
    linear: float
    constant: float
    block_count: int


def boundary_coefficients(n_qubits: int, coherence_abs: float) -> BoundaryCoefficients:
    """Quadratic coefficients for the given qubit count and corner coherence."""
    n = 1 << (_check_n_qubits(n_qubits) - 1)
    coherence_abs = _check_coherence_abs(coherence_abs)
    return BoundaryCoefficients(
        quadratic=-2.0 * (n + 1) / (n - 1),
        linear=4.0 / (n - 1),
        constant=1.0 - 1.0 / (n - 1) - 2.0 * coherence_abs**2,
        block_count=n,
    )


def corner_weight(n_qubits: int, coherence_abs: float) -> float:
    """Diagonal weight of the two coherent corners on the extremal family.

    Equals 1 / (n + 1) while the coherence is small enough to afford the
    entropy-optimal flat diagonal, and the coherence magnitude itself beyond
    that point (the corner then saturates |z| = sqrt(a * b)).
    """
    n = 1 << (_check_n_qubits(n_qubits) - 1)
    coherence_abs = _check_coherence_abs(coherence_abs)
    flat = 1.0 / (n + 1)
    return flat if coherence_abs <= flat else coherence_abs


def interior_weight(n_qubits: int, coherence_abs: float) -> float:
    """Weight of each of the n - 1 interior diagonal entries on the extremal family.

    Continuous counterpart of :func:`corner_weight`: both branches meet at
    coherence 1 / (n + 1).
    """
    n = 1 << (_check_n_qubits(n_qubits) - 1)
    coherence_abs = _check_coherence_abs(coherence_abs)
    flat = 1.0 / (n + 1)
    if coherence_abs <= flat:
        return flat
    return (1.0 - 2.0 * coherence_abs) / (n - 1)


def boundary_entropy(n_qubits: int, coherence_abs: float) -> float:
    """Maximum linear entropy among X-states with concurrence 2 * coherence_abs.

    Evaluated through the extremal state's purity, which is algebraically
    identical to the quadratic form of :func:`boundary_coefficients` but is
    exact at the endpoints (0 at coherence 1/2, the critical entropy at 0).
    """
    n_qubits = _check_n_qubits(n_qubits)
    coherence_abs = _check_coherence_abs(coherence_abs)
    n = 1 << (n_qubits - 1)
    f = corner_weight(n_qubits, coherence_abs)
    g = interior_weight(n_qubits, coherence_abs)
    pur = 2.0 * f * f + 2.0 * coherence_abs**2 + (n - 1) * g * g
    d = float(1 << n_qubits)
    return d / (d - 1.0) * (1.0 - pur)


def critical_entropy(n_qubits: int) -> float:
    """Entropy above which no N-qubit X-state is genuinely entangled."""
    return float(critical_entropy_fraction(n_qubits))


def critical_entropy_fraction(n_qubits: int) -> Fraction:
    """Exact value of the critical entropy, 2^(2N-1) / ((2^N - 1) (2^(N-1) + 1))."""
    n_qubits = _check_n_qubits(n_qubits)
    return Fraction(1 << (2 * n_qubits - 1), ((1 << n_qubits) - 1) * ((1 << (n_qubits - 1)) + 1))


def entropy_vs_diagonal_curve(
    n_qubits: int, coherence_abs: float, samples: int
) -> np.ndarray:
    """Entropy of the single-coherence family as the corner weight varies.

    Sweeps the shared corner diagonal weight v over its allowed range
    [coherence_abs, 1/2] at ``samples`` evenly spaced points and returns an
    array of shape (samples, 2) with columns (v, entropy).  The curve is the
    downward parabola of :func:`boundary_coefficients`; its maximum over the
    range lands at 1 / (n + 1) when the coherence allows, and at the left
    endpoint otherwise.
    """
    n_qubits = _check_n_qubits(n_qubits)
    coherence_abs = _check_coherence_abs(coherence_abs)
    if samples < 2:
        raise ValueError(f"samples must be at least 2, got {samples}")
    coeff = boundary_coefficients(n_qubits, coherence_abs)
    v = np.linspace(coherence_abs, 0.5, samples)
    d = float(1 << n_qubits)
    entropy = d / (d - 1.0) * (
        coeff.quadratic * v**2 + coeff.linear * v + coeff.constant
    )
    return np.column_stack([v, entropy])


@dataclass(frozen=True)
class MemsPoint:
    """One member of the extremal family, with its derived quantities.

    ``coherence`` is the (possibly complex) corner antidiagonal element;
    every derived quantity depends on its magnitude only.  ``state`` is the
    compact realization: corners carry ``corner_weight`` on the diagonal,
    the remaining upper-diagonal entries carry ``interior_weight``, and all
    other entries vanish.
    """

    n_qubits: int
    coherence: complex
    corner_weight: float
    interior_weight: float
    concurrence: float
    entropy: float
    state: XState


def mems_state(n_qubits: int, coherence: complex) -> MemsPoint:
    """Build the maximum-entropy X-state at concurrence 2 * |coherence|.

    ``coherence`` may be complex; the canonical family uses real values in
    [0, 1/2].  Magnitudes above 1/2 are rejected (the trace could not be 1).
    """
    n_qubits = _check_n_qubits(n_qubits)
    coherence = complex(coherence)
    mag = abs(coherence)
    if mag > 0.5:
        raise ValueError(f"coherence magnitude must be at most 1/2, got {mag}")
    n = 1 << (n_qubits - 1)
    f = corner_weight(n_qubits, mag)
    g = interior_weight(n_qubits, mag)
    a = np.full(n, g)
    a[0] = f
    b = np.zeros(n)
    b[0] = f
    z = np.zeros(n, dtype=np.complex128)
    z[0] = coherence
    return MemsPoint(
        n_qubits=n_qubits,
        coherence=coherence,
        corner_weight=f,
        interior_weight=g,
        concurrence=2.0 * mag,
        entropy=boundary_entropy(n_qubits, mag),
        state=XState(n_qubits, a, b, z),
    )


class EntropyRaisingResult(NamedTuple):
    """Transformed state plus the block relabeling applied before rewriting.

    ``permutation[i]`` is the input block written to output position i; it is
    the identity except when the concurrence-attaining block had to be swapped
    into the leading position.
    """

    state: XState
    permutation: tuple[int, ...]


def entropy_raising_transform(state: XState) -> EntropyRaisingResult:
    """Rewrite a genuinely entangled X-state to raise entropy at equal concurrence.

    The concurrence-attaining block is moved to the leading position (block
    relabeling is a symmetry of the X form), then all other blocks are
    collapsed onto the upper diagonal: their b weights are folded into a,
    their coherences are dropped, and the leading coherence is reduced to
    exactly half the concurrence.  The output has the same concurrence as the
    input and linear entropy at least as large.

    Raises ``ValueError`` for states with zero concurrence; the rewrite would
    produce a negative leading coherence there and is not defined.
    """
    conc = gm_concurrence(state)
    if conc.value <= 0.0:
        raise ValueError(
            "entropy_raising_transform requires a genuinely entangled state "
            "(concurrence > 0)"
        )
    n = state.block_count
    perm = list(range(n))
    lead = conc.argmax_index - 1
    perm[0], perm[lead] = perm[lead], perm[0]
    a = state.a[perm]
    b = state.b[perm]
    z = state.z[perm]
    roots = np.sqrt(np.clip(a * b, 0.0, None))
    new_a = a.copy()
    new_a[1:] += b[1:]
    new_b = np.zeros_like(b)
    new_b[0] = b[0]
    new_z = np.zeros_like(z)
    new_z[0] = abs(z[0]) - (float(np.sum(roots)) - roots[0])
    return EntropyRaisingResult(
        state=XState(state.n_qubits, new_a, new_b, new_z),
        permutation=tuple(perm),
    )
