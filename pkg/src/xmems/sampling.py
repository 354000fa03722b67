"""Seeded random X-states and the Monte Carlo entanglement-entropy sweep.

Every sample is a pure function of (master_seed, sample_index): the
per-sample generator is derived statelessly through numpy's SeedSequence
with entropy (master_seed, index), so any subset of indices can be produced
independently, in any order, and across any number of shards, with
bit-identical results.

The sampling law: the 2n diagonal entries are drawn from the flat simplex
(normalized unit exponentials, obtained from uniforms by inverse CDF so only
the stable ``Generator.random`` primitive is consumed), and each antidiagonal
entry is a uniform fraction of its ceiling sqrt(a_i * b_i) with a uniform
phase.  Construction then nudges the result so that it passes validation at
tolerance zero: the trace sum is snapped to exactly 1.0 and any off-diagonal
magnitude that rounded above its ceiling is scaled back below it.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import IO, Iterable, Iterator, NamedTuple

import numpy as np

from .core import XState
from .measures import measure

DIAGONAL_DISTRIBUTIONS = ("flat-simplex",)
OFFDIAG_FILLS = ("uniform-fraction",)

#: Stream tag separating the entangled-biased sampler from the plain one.
_ENTANGLED_STREAM = 1

SWEEP_CSV_HEADER = "index,entropy,concurrence"


@dataclass(frozen=True)
class SamplerConfig:
    """Sweep parameters; validated on construction."""

    n_qubits: int
    count: int
    master_seed: int
    diagonal_distribution: str = "flat-simplex"
    offdiag_fill: str = "uniform-fraction"

    def __post_init__(self) -> None:
        if self.n_qubits < 2:
            raise ValueError(f"n_qubits must be at least 2, got {self.n_qubits}")
        if self.count < 1:
            raise ValueError(f"count must be at least 1, got {self.count}")
        if not 0 <= self.master_seed < 2**64:
            raise ValueError("master_seed must be an unsigned 64-bit integer")
        if self.diagonal_distribution not in DIAGONAL_DISTRIBUTIONS:
            raise ValueError(f"unknown diagonal distribution {self.diagonal_distribution!r}")
        if self.offdiag_fill not in OFFDIAG_FILLS:
            raise ValueError(f"unknown off-diagonal fill {self.offdiag_fill!r}")


class SweepRecord(NamedTuple):
    sample_index: int
    entropy: float
    concurrence: float


def _rng_for(master_seed: int, index: int, *stream: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence((master_seed, index, *stream)))


def _snap_trace(a: np.ndarray, b: np.ndarray) -> None:
    # push the rounding residue into the largest entry until the validator's
    # exact trace sum is 1.0; contraction makes this converge in a step or two
    for _ in range(32):
        residual = 1.0 - math.fsum(a.tolist() + b.tolist())
        if residual == 0.0:
            return
        if float(a.max()) >= float(b.max()):
            a[np.argmax(a)] += residual
        else:
            b[np.argmax(b)] += residual


def _snap_offdiag(z: np.ndarray, ceiling: np.ndarray) -> None:
    # the polar construction can overshoot the ceiling by an ulp
    bad = np.abs(z) > ceiling
    while np.any(bad):
        z[bad] *= 1.0 - 2.0**-50
        bad = np.abs(z) > ceiling


def sample_xstate(config: SamplerConfig, index: int) -> XState:
    """Deterministic valid X-state for one sample index.

    Identical (master_seed, index) pairs give bit-identical states.  The
    construction guarantees the physicality conditions at tolerance zero,
    with no rejection step.
    """
    if not 0 <= index < config.count:
        raise ValueError(f"index must be in [0, {config.count}), got {index}")
    rng = _rng_for(config.master_seed, index)
    n = 1 << (config.n_qubits - 1)
    # one draw of 4n uniforms: 2n for the simplex, n fractions, n phases
    u = rng.random(4 * n)
    exponentials = -np.log1p(-u[: 2 * n])
    diag = exponentials / exponentials.sum()
    a = diag[:n].copy()
    b = diag[n:].copy()
    _snap_trace(a, b)
    ceiling = np.sqrt(a * b)
    z = u[2 * n : 3 * n] * ceiling * np.exp(2j * np.pi * u[3 * n :])
    _snap_offdiag(z, ceiling)
    return XState._from_trusted_arrays(config.n_qubits, a, b, z)


def sample_entangled_xstate(n_qubits: int, master_seed: int, index: int) -> XState:
    """Deterministic random X-state guaranteed to carry positive concurrence.

    The plain sampler almost never reaches the genuinely entangled region
    once n = 2^(N-1) grows, so concurrence-preserving operations are
    exercised on this biased family instead: one block receives weight
    w > 1/2 split evenly between its two diagonal entries, its coherence is
    drawn large enough to dominate the geometric means of the remaining
    diagonal (which can total at most (1 - w) / 2), and the heavy block is
    then relabeled to a random position.
    """
    if n_qubits < 2:
        raise ValueError(f"n_qubits must be at least 2, got {n_qubits}")
    rng = _rng_for(master_seed, index, _ENTANGLED_STREAM)
    n = 1 << (n_qubits - 1)
    w = 0.55 + 0.44 * rng.random()
    rest = -np.log1p(-rng.random(2 * n - 2))
    rest *= (1.0 - w) / rest.sum()
    a = np.concatenate([[w / 2.0], rest[: n - 1]])
    b = np.concatenate([[w / 2.0], rest[n - 1 :]])
    # fractions below (1 - w) / w cannot beat the rest of the diagonal
    floor = (1.0 - w) / w
    fraction = floor + (0.05 + 0.95 * rng.random()) * (1.0 - floor)
    z = np.zeros(n, dtype=np.complex128)
    z[0] = fraction * (w / 2.0) * np.exp(2j * np.pi * rng.random())
    tail_fraction = rng.random(n - 1)
    tail_phase = 2.0 * np.pi * rng.random(n - 1)
    z[1:] = tail_fraction * np.sqrt(a[1:] * b[1:]) * np.exp(1j * tail_phase)
    lead = int(rng.integers(n))
    perm = list(range(n))
    perm[0], perm[lead] = perm[lead], perm[0]
    return XState(n_qubits, a[perm], b[perm], z[perm])


def shard_range(count: int, shard: int, n_shards: int) -> range:
    """Contiguous index range of one shard; shards in order tile [0, count)."""
    if n_shards < 1:
        raise ValueError(f"n_shards must be at least 1, got {n_shards}")
    if not 0 <= shard < n_shards:
        raise ValueError(f"shard must be in [0, {n_shards}), got {shard}")
    return range(count * shard // n_shards, count * (shard + 1) // n_shards)


def sweep(config: SamplerConfig, shard: int = 0, n_shards: int = 1) -> Iterator[SweepRecord]:
    """Yield (index, entropy, concurrence) for every sample in the shard.

    The emitted records are a pure function of the config: concatenating all
    shards in order reproduces the single-shard stream exactly, because each
    record depends only on (master_seed, index).
    """
    for index in shard_range(config.count, shard, n_shards):
        pair = measure(sample_xstate(config, index))
        yield SweepRecord(index, pair.entropy, pair.concurrence)


def format_sweep_record(record: SweepRecord) -> str:
    """One CSV row, with 17 significant digits so doubles round-trip exactly."""
    return f"{record.sample_index},{record.entropy:.17g},{record.concurrence:.17g}"


def write_sweep_csv(records: Iterable[SweepRecord], stream: IO[str] = sys.stdout) -> int:
    """Write the header and one row per record; returns the row count."""
    stream.write(SWEEP_CSV_HEADER + "\n")
    count = 0
    for record in records:
        stream.write(format_sweep_record(record) + "\n")
        count += 1
    return count
