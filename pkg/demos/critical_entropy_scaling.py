"""How mixed can a genuinely entangled X-state be?

Prints the critical entropy, the mixedness threshold above which no
N-qubit X-state carries genuine multipartite entanglement, as an exact
fraction and a decimal for N = 2..20.  The threshold rises with N and
approaches 1: with more qubits, ever more mixed states can stay entangled.
"""

import _bootstrap  # noqa: F401

from xmems import critical_entropy_fraction

print(f"{'N':>3} {'exact':>22} {'decimal':>12} {'gap to 1':>12}")
previous = None
for n_qubits in range(2, 21):
    frac = critical_entropy_fraction(n_qubits)
    value = float(frac)
    assert previous is None or frac > previous
    previous = frac
    print(
        f"{n_qubits:>3} {f'{frac.numerator}/{frac.denominator}':>22}"
        f" {value:12.8f} {1 - value:12.3e}"
    )
print("\nstrictly increasing, always below 1")
