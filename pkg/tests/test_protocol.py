"""Tests for the path-to-OAM transfer protocol."""

import math

import numpy as np
import pytest

from beams.mode_matrix import PAULI, ModeMatrix
from beams.separability import is_ppt
from beams.states import equivalent_state
from protocol.transfer import (
    BellBeam,
    TripartiteState,
    bell_project,
    build_channel,
    correction,
    prepare_input,
    retrieve_bloch,
    run_protocol,
    transfer,
)
from su2.errors import DimensionMismatch, OutOfRange, Singularity
from su2.spin import SpinLabel


def random_cases(n, seed=23):
    rng = np.random.default_rng(seed)
    for _ in range(n):
        v = rng.normal(size=3)
        p = v / np.linalg.norm(v) * rng.uniform(0, 1)
        alpha = rng.uniform(0.1, 1.0)
        T = SpinLabel(int(rng.integers(1, 5)))
        yield p, alpha, T


class TestBellBeams:
    def test_first_beam_is_singlet(self):
        s = 1 / math.sqrt(2)
        np.testing.assert_allclose(BellBeam(1).vector, [0, s, -s, 0])

    def test_orthonormal(self):
        vectors = np.array([b.vector for b in BellBeam.all()])
        np.testing.assert_allclose(vectors @ vectors.conj().T, np.eye(4), atol=1e-15)

    def test_index_range(self):
        with pytest.raises(OutOfRange):
            BellBeam(5)


class TestChannel:
    @pytest.mark.parametrize("T", ["1/2", 1, "3/2"])
    def test_zero_alpha_is_maximally_mixed(self, T):
        channel = build_channel(0.0, T)
        dim = 2 * SpinLabel.of(T).dim
        assert channel.distance(ModeMatrix.maximally_mixed(dim)) < 1e-12

    def test_half_alpha_at_spin_one_is_ppt(self):
        assert is_ppt(build_channel(0.5, 1), (2, 3))

    def test_spin_half_channel_is_pauli_werner_form(self):
        # (1 - α σ·σ)/4, with the OAM factor in ascending-m order (|H) pairs with m = -1/2)
        sigma_dot_sigma = sum(np.kron(s, s) for s in PAULI)
        swap = np.kron(np.eye(2), PAULI[0])
        expected = swap @ (np.eye(4) - 0.6 * sigma_dot_sigma) @ swap / 4
        assert build_channel(0.6, "1/2").distance(ModeMatrix(expected)) < 1e-12

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            build_channel(1.5, 1)


class TestProtocol:
    def test_weight_is_one_quarter(self):
        for p, alpha, T in random_cases(50):
            state = prepare_input(p, alpha, T)
            for beam in BellBeam.all():
                assert abs(bell_project(state, beam).weight - 0.25) < 1e-12

    def test_corrected_output_is_independent_of_outcome(self):
        for p, alpha, T in random_cases(20, seed=31):
            outputs = [run_protocol(p, alpha, T, beam) for beam in BellBeam.all()]
            for other in outputs[1:]:
                assert outputs[0].distance(other) < 1e-10

    def test_output_is_scaled_equivalent_state(self):
        for p, alpha, T in random_cases(20, seed=37):
            expected = equivalent_state(alpha * p, T)
            for beam in BellBeam.all():
                assert run_protocol(p, alpha, T, beam).distance(expected) < 1e-10

    def test_round_trip(self):
        for p, alpha, T in random_cases(50, seed=41):
            for beam in BellBeam.all():
                retrieved = retrieve_bloch(run_protocol(p, alpha, T, beam), alpha, T)
                np.testing.assert_allclose(retrieved.as_array(), p, atol=1e-10)

    def test_round_trip_of_unit_vectors_at_tiny_alpha(self):
        rng = np.random.default_rng(43)
        for _ in range(20):
            v = rng.normal(size=3)
            p = v / np.linalg.norm(v)
            for beam in BellBeam.all():
                retrieved = retrieve_bloch(run_protocol(p, 1e-6, 2, beam), 1e-6, 2)
                assert retrieved.norm() <= 1 + 1e-12
                np.testing.assert_allclose(retrieved.as_array(), p, atol=1e-7)

    def test_negative_alpha_round_trip(self):
        p = np.array([0.1, -0.6, 0.3])
        J = run_protocol(p, -0.4, 2, BellBeam(3))
        np.testing.assert_allclose(retrieve_bloch(J, -0.4, 2).as_array(), p, atol=1e-10)

    def test_first_beam_needs_no_correction(self):
        np.testing.assert_allclose(correction(BellBeam(1), 1), np.eye(3))

    @pytest.mark.parametrize("index", [2, 3, 4])
    def test_spin_half_corrections_are_pauli_matrices(self, index):
        U = correction(BellBeam(index), "1/2")
        sigma = PAULI[index - 2]
        # U = c·σ with |c| = 1
        overlap = np.trace(sigma @ U) / 2
        assert abs(overlap) == pytest.approx(1.0, abs=1e-12)
        np.testing.assert_allclose(U, overlap * sigma, atol=1e-12)

    def test_zero_alpha_is_singular(self):
        J = run_protocol([0, 0, 1], 0.0, 1, BellBeam(2))
        np.testing.assert_allclose(J.entries, np.eye(3) / 3, atol=1e-12)
        with pytest.raises(Singularity):
            retrieve_bloch(J, 0.0, 1)

    def test_retrieval_dimension_check(self):
        with pytest.raises(DimensionMismatch):
            retrieve_bloch(ModeMatrix.maximally_mixed(4), 0.5, 1)

    def test_tripartite_dimension_check(self):
        with pytest.raises(DimensionMismatch):
            TripartiteState(SpinLabel.of(1), ModeMatrix.maximally_mixed(8))


class TestTransferRecord:
    def test_fields(self):
        record = transfer([0.0, 0.6, 0.8], 0.5, "3/2", BellBeam(4))
        assert record.weight == pytest.approx(0.25, abs=1e-12)
        assert record.T == "3/2"
        assert record.beam == 4
        assert record.roundtrip_error < 1e-10
        np.testing.assert_allclose(record.p_out, [0.0, 0.6, 0.8], atol=1e-10)
        assert record.error is None

    def test_singularity_reported(self):
        record = transfer([0.0, 0.0, 1.0], 0.0, 1, BellBeam(1))
        assert record.error == "singularity"
        assert record.p_out is None
        assert record.weight == pytest.approx(0.25)
