"""Shared corpora and hypothesis strategies for the test suite."""

import numpy as np
from hypothesis import assume
from hypothesis import strategies as st

from xmems import SamplerConfig, XState, sample_entangled_xstate, sample_xstate


def random_states(n_qubits: int, count: int, seed: int) -> list[XState]:
    config = SamplerConfig(n_qubits=n_qubits, count=count, master_seed=seed)
    return [sample_xstate(config, i) for i in range(count)]


def entangled_states(n_qubits: int, count: int, seed: int) -> list[XState]:
    return [sample_entangled_xstate(n_qubits, seed, i) for i in range(count)]


@st.composite
def xstates(draw, min_qubits: int = 2, max_qubits: int = 3) -> XState:
    """Valid X-states: normalized diagonal plus in-bound antidiagonal entries."""
    n_qubits = draw(st.integers(min_qubits, max_qubits))
    n = 1 << (n_qubits - 1)
    weights = np.asarray(
        draw(st.lists(st.floats(0.0, 1.0), min_size=2 * n, max_size=2 * n))
    )
    assume(float(weights.sum()) > 1e-2)
    diag = weights / weights.sum()
    fractions = np.asarray(draw(st.lists(st.floats(0.0, 1.0), min_size=n, max_size=n)))
    phases = np.asarray(
        draw(st.lists(st.floats(0.0, 2.0 * np.pi, exclude_max=True), min_size=n, max_size=n))
    )
    a, b = diag[:n], diag[n:]
    z = fractions * np.sqrt(a * b) * np.exp(1j * phases)
    return XState(n_qubits, a, b, z)
