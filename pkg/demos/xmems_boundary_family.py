"""Walk the maximally entangled mixed X-state family along its boundary.

For a few qubit counts, tabulate the extremal state at a grid of corner
coherences: the corner and interior diagonal weights, the concurrence
C = 2|coherence|, and the maximal entropy.  Then show where the entropy
curve peaks as the corner weight varies, which is what singles the family
out: at 1/(n+1) while the coherence is small, and at the coherence itself
once it passes 1/(n+1).
"""

import _bootstrap  # noqa: F401

import numpy as np

from xmems import entropy_vs_diagonal_curve, linear_entropy, mems_state, validate

for n_qubits in (2, 3, 5):
    n = 1 << (n_qubits - 1)
    print(f"\nN = {n_qubits} qubits (n = {n} blocks), branch point at 1/(n+1) = {1/(n+1):.4f}")
    print(f"{'coherence':>10} {'corner':>8} {'interior':>9} {'C':>7} {'S':>8}")
    for coherence in np.linspace(0.0, 0.5, 6):
        point = mems_state(n_qubits, float(coherence))
        assert validate(point.state).ok
        assert abs(linear_entropy(point.state) - point.entropy) < 1e-12
        print(
            f"{coherence:10.2f} {point.corner_weight:8.4f} {point.interior_weight:9.4f}"
            f" {point.concurrence:7.3f} {point.entropy:8.5f}"
        )

print("\nEntropy vs corner weight for N = 3 (argmax marked):")
for coherence in (0.05, 0.15, 0.25, 0.40):
    curve = entropy_vs_diagonal_curve(3, coherence, samples=10_001)
    peak = curve[np.argmax(curve[:, 1])]
    branch = "flat 1/(n+1)" if coherence <= 0.2 else "left endpoint (= coherence)"
    print(
        f"  coherence {coherence:.2f}: peak S = {peak[1]:.5f} at corner weight"
        f" {peak[0]:.4f}  [{branch}]"
    )
