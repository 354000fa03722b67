from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from xmems import (
    XState,
    boundary_coefficients,
    boundary_entropy,
    corner_weight,
    critical_entropy,
    critical_entropy_fraction,
    dense_purity,
    entropy_raising_transform,
    entropy_vs_diagonal_curve,
    ghz_state,
    gm_concurrence,
    interior_weight,
    linear_entropy,
    maximally_mixed_state,
    mems_state,
    sample_entangled_xstate,
    to_dense,
    validate,
)
from helpers import entangled_states, random_states


class TestCriticalEntropy:
    def test_exact_small_cases(self):
        assert critical_entropy_fraction(2) == Fraction(8, 9)
        assert critical_entropy_fraction(3) == Fraction(32, 35)
        assert critical_entropy_fraction(10) == Fraction(524288, 524799)

    def test_ten_qubit_decimal(self):
        assert critical_entropy(10) == pytest.approx(0.999027, abs=1e-6)

    def test_strictly_increasing_below_one(self):
        values = [critical_entropy_fraction(n) for n in range(2, 22)]
        assert all(earlier < later for earlier, later in zip(values, values[1:]))
        assert all(value < 1 for value in values)

    def test_rejects_single_qubit(self):
        with pytest.raises(ValueError):
            critical_entropy(1)
        with pytest.raises(ValueError):
            critical_entropy_fraction(0)


class TestBoundaryCurve:
    def test_two_qubit_values(self):
        assert boundary_entropy(2, 0.0) == pytest.approx(8 / 9, abs=1e-12)
        assert boundary_entropy(2, 1 / 3) == pytest.approx(16 / 27, abs=1e-12)

    def test_pure_endpoint_is_exactly_zero(self):
        for n_qubits in (2, 3, 5, 8):
            assert boundary_entropy(n_qubits, 0.5) == 0.0

    def test_zero_coherence_matches_critical_entropy(self):
        for n_qubits in range(2, 9):
            assert boundary_entropy(n_qubits, 0.0) == pytest.approx(
                critical_entropy(n_qubits), abs=1e-12
            )

    def test_strictly_decreasing(self):
        for n_qubits in (2, 3, 5):
            grid = np.linspace(0.0, 0.5, 200)
            values = [boundary_entropy(n_qubits, g) for g in grid]
            assert all(x > y for x, y in zip(values, values[1:]))

    def test_quadratic_form_agrees(self):
        for n_qubits in (2, 3, 4, 6):
            d = 1 << n_qubits
            scale = d / (d - 1)
            for coherence in np.linspace(0.0, 0.5, 21):
                coeff = boundary_coefficients(n_qubits, coherence)
                f = corner_weight(n_qubits, coherence)
                quadratic = scale * (
                    coeff.quadratic * f**2 + coeff.linear * f + coeff.constant
                )
                assert boundary_entropy(n_qubits, coherence) == pytest.approx(
                    quadratic, abs=1e-12
                )

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            boundary_entropy(2, 0.6)
        with pytest.raises(ValueError):
            boundary_entropy(2, -0.01)
        with pytest.raises(ValueError):
            boundary_entropy(1, 0.1)

    def test_dominates_random_entangled_states(self):
        for n_qubits in (2, 3, 4):
            corpus = entangled_states(n_qubits, 400, seed=60 + n_qubits) + [
                s
                for s in random_states(n_qubits, 400, seed=61 + n_qubits)
                if gm_concurrence(s).value > 1e-12
            ]
            for state in corpus:
                ceiling = boundary_entropy(n_qubits, gm_concurrence(state).value / 2)
                assert linear_entropy(state) <= ceiling + 1e-9


class TestBoundaryCoefficients:
    def test_parabola_opens_downward(self):
        for n_qubits in range(2, 9):
            assert boundary_coefficients(n_qubits, 0.2).quadratic < 0

    def test_vertex_at_equal_population_weight(self):
        for n_qubits in (2, 3, 4, 7):
            coeff = boundary_coefficients(n_qubits, 0.1)
            vertex = -coeff.linear / (2 * coeff.quadratic)
            assert vertex == pytest.approx(1 / (coeff.block_count + 1), abs=1e-15)


class TestWeights:
    def test_flat_branch(self):
        assert corner_weight(2, 0.1) == pytest.approx(1 / 3, abs=0)
        assert interior_weight(2, 0.1) == pytest.approx(1 / 3, abs=0)

    def test_saturated_branch(self):
        assert corner_weight(2, 0.4) == 0.4
        assert interior_weight(2, 0.4) == pytest.approx(0.2, abs=1e-15)
        assert corner_weight(3, 0.3) == 0.3
        assert interior_weight(3, 0.3) == pytest.approx(0.4 / 3, abs=1e-15)

    def test_continuous_at_branch_point(self):
        for n_qubits in (2, 3, 4, 5):
            n = 1 << (n_qubits - 1)
            junction = 1 / (n + 1)
            eps = 1e-12
            assert corner_weight(n_qubits, junction - eps) == pytest.approx(
                corner_weight(n_qubits, junction + eps), abs=1e-10
            )
            assert interior_weight(n_qubits, junction - eps) == pytest.approx(
                interior_weight(n_qubits, junction + eps), abs=1e-10
            )


class TestMemsState:
    def test_two_qubit_third(self):
        point = mems_state(2, 1 / 3)
        assert np.allclose(point.state.a, [1 / 3, 1 / 3])
        assert np.allclose(point.state.b, [1 / 3, 0.0])
        assert np.allclose(point.state.z, [1 / 3, 0.0])
        assert point.concurrence == pytest.approx(2 / 3, abs=1e-15)
        assert point.entropy == pytest.approx(16 / 27, abs=1e-12)
        assert dense_purity(to_dense(point.state)) == pytest.approx(5 / 9, abs=1e-12)
        assert gm_concurrence(point.state).value == pytest.approx(2 / 3, abs=1e-12)

    def test_half_coherence_is_ghz(self):
        for n_qubits in (2, 3, 5):
            point = mems_state(n_qubits, 0.5)
            assert point.state == ghz_state(n_qubits)
            assert point.entropy == 0.0
            assert point.concurrence == 1.0

    def test_zero_coherence_hits_critical_entropy(self):
        for n_qubits in (2, 3, 4):
            point = mems_state(n_qubits, 0.0)
            assert point.concurrence == 0.0
            assert point.entropy == pytest.approx(critical_entropy(n_qubits), abs=1e-12)

    def test_rejects_overlarge_coherence(self):
        with pytest.raises(ValueError):
            mems_state(2, 0.5001)
        with pytest.raises(ValueError):
            mems_state(3, 0.4 + 0.4j)

    def test_complex_coherence_allowed(self):
        point = mems_state(3, 0.2j)
        assert point.state.z[0] == 0.2j
        assert point.concurrence == pytest.approx(0.4, abs=1e-15)
        assert point.entropy == pytest.approx(mems_state(3, 0.2).entropy, abs=1e-15)
        assert validate(point.state).ok

    def test_family_valid_and_consistent(self):
        for n_qubits in range(2, 9):
            for coherence in np.linspace(0.0, 0.5, 11):
                point = mems_state(n_qubits, coherence)
                assert validate(point.state).ok
                assert linear_entropy(point.state) == pytest.approx(
                    point.entropy, abs=1e-12
                )
                assert gm_concurrence(point.state).value == pytest.approx(
                    point.concurrence, abs=1e-12
                )
                assert point.entropy == pytest.approx(
                    boundary_entropy(n_qubits, coherence), abs=1e-12
                )


class TestEntropyCurve:
    def test_vertex_interior_when_coherence_small(self):
        curve = entropy_vs_diagonal_curve(3, 0.1, samples=4001)
        best = curve[np.argmax(curve[:, 1])]
        assert best[0] == pytest.approx(0.2, abs=(0.5 - 0.1) / 4000 + 1e-12)

    def test_argmax_at_left_endpoint_when_coherence_large(self):
        curve = entropy_vs_diagonal_curve(3, 0.3, samples=4001)
        assert np.argmax(curve[:, 1]) == 0
        assert curve[0, 0] == 0.3

    def test_range_and_shape(self):
        curve = entropy_vs_diagonal_curve(2, 0.25, samples=11)
        assert curve.shape == (11, 2)
        assert curve[0, 0] == 0.25
        assert curve[-1, 0] == 0.5

    def test_peak_value_matches_boundary(self):
        for n_qubits in (2, 3, 4):
            for coherence in (0.05, 0.2, 0.35):
                curve = entropy_vs_diagonal_curve(n_qubits, coherence, samples=20001)
                assert curve[:, 1].max() == pytest.approx(
                    boundary_entropy(n_qubits, coherence), abs=1e-7
                )

    def test_sample_count_checked(self):
        with pytest.raises(ValueError):
            entropy_vs_diagonal_curve(2, 0.1, samples=1)


class TestEntropyRaisingTransform:
    def test_ghz_fixed_point(self):
        for n_qubits in (2, 4):
            result = entropy_raising_transform(ghz_state(n_qubits))
            assert result.state == ghz_state(n_qubits)
            assert result.permutation == tuple(range(1 << (n_qubits - 1)))

    def test_worked_example(self):
        state = XState(2, [0.35, 0.05], [0.5, 0.1], [0.4, 0.0])
        result = entropy_raising_transform(state)
        assert np.allclose(result.state.a, [0.35, 0.15])
        assert np.allclose(result.state.b, [0.5, 0.0])
        assert result.state.z[0] == pytest.approx(0.4 - np.sqrt(0.005), abs=1e-15)
        assert result.state.z[1] == 0.0
        assert result.permutation == (0, 1)
        assert gm_concurrence(result.state).value == pytest.approx(
            gm_concurrence(state).value, abs=1e-12
        )
        assert linear_entropy(result.state) >= linear_entropy(state) - 1e-12

    def test_relabels_leading_block(self):
        # same state with its blocks swapped: the maximum sits at block 2
        state = XState(2, [0.05, 0.35], [0.1, 0.5], [0.0, 0.4])
        assert gm_concurrence(state).argmax_index == 2
        result = entropy_raising_transform(state)
        assert result.permutation == (1, 0)
        assert gm_concurrence(result.state).value == pytest.approx(
            gm_concurrence(state).value, abs=1e-12
        )
        assert gm_concurrence(result.state).argmax_index == 1

    def test_rejects_separable_states(self):
        with pytest.raises(ValueError, match="entangled"):
            entropy_raising_transform(maximally_mixed_state(3))
        with pytest.raises(ValueError, match="entangled"):
            entropy_raising_transform(XState(2, [0.3, 0.2], [0.1, 0.4], [0.15, 0.1]))

    def test_laws_on_entangled_corpus(self):
        for n_qubits in (2, 3, 4, 5):
            for state in entangled_states(n_qubits, 500, seed=70 + n_qubits):
                result = entropy_raising_transform(state)
                assert validate(result.state).ok
                assert gm_concurrence(result.state).value == pytest.approx(
                    gm_concurrence(state).value, abs=1e-12
                )
                assert linear_entropy(result.state) >= linear_entropy(state) - 1e-12

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 10_000), st.sampled_from([2, 3, 4]))
    def test_output_always_single_coherence(self, index, n_qubits):
        state = sample_entangled_xstate(n_qubits, 12345, index)
        result = entropy_raising_transform(state)
        assert np.all(result.state.b[1:] == 0.0)
        assert np.all(result.state.z[1:] == 0.0)
        assert result.state.z[0].imag == 0.0
        assert result.state.z[0].real > 0.0
