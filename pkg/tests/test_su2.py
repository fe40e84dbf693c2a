"""Tests for SU(2) generators, coherent states and rotations."""

import math

import numpy as np
import pytest

from su2.coherent import (
    UnitVector3,
    coherent_state,
    coherent_states_on,
    resolution_of_identity_residual,
    sphere_grid,
    wigner_rotation,
)
from su2.errors import NotHermitian, OutOfRange
from su2.linalg import herm_exp, same_ray, unitarity_residual
from su2.spin import SpinLabel, make_generators

SPINS = [SpinLabel(twice) for twice in range(1, 13)]


def random_hermitian(rng, dim):
    A = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return (A + A.conj().T) / 2


class TestSpinLabel:
    def test_parses_fraction_strings(self):
        label = SpinLabel.of("3/2")
        assert label.twice == 3
        assert label.dim == 4
        assert str(label) == "3/2"

    def test_parses_numbers(self):
        assert SpinLabel.of(1.5) == SpinLabel.of("3/2")
        assert str(SpinLabel.of(2)) == "2"
        assert SpinLabel.of(2).is_integer

    def test_rejects_quarter_values(self):
        with pytest.raises(OutOfRange):
            SpinLabel.of(0.75)

    def test_rejects_garbage(self):
        with pytest.raises(OutOfRange):
            SpinLabel.of("one")

    def test_weights_ascend(self):
        np.testing.assert_array_equal(SpinLabel.of(1).weights(), [-1, 0, 1])


class TestMakeGenerators:
    def test_spin_half_is_half_pauli_in_ascending_order(self):
        frame = make_generators("1/2")
        # reversing the basis maps m = -1/2, +1/2 onto the (up, down) order of the Pauli matrices
        swap = np.array([[0, 1], [1, 0]])
        pauli = [
            np.array([[0, 1], [1, 0]]),
            np.array([[0, -1j], [1j, 0]]),
            np.array([[1, 0], [0, -1]]),
        ]
        for T, sigma in zip(frame.generators(), pauli):
            np.testing.assert_allclose(swap @ T @ swap, sigma / 2, atol=1e-15)

    def test_spin_one_entries(self):
        frame = make_generators(1)
        s = 1 / math.sqrt(2)
        np.testing.assert_allclose(frame.T1, [[0, s, 0], [s, 0, s], [0, s, 0]], atol=1e-15)
        np.testing.assert_allclose(np.abs(frame.T2), [[0, s, 0], [s, 0, s], [0, s, 0]], atol=1e-15)
        assert frame.T2[0, 1] == pytest.approx(-frame.T2[1, 0])
        np.testing.assert_allclose(frame.T3, np.diag([-1, 0, 1]))

    def test_ladder_elements_are_positive(self):
        frame = make_generators(2)
        raising = frame.T1 + 1j * frame.T2
        below = np.diag(raising, k=-1)
        assert np.all(below.real > 0)
        np.testing.assert_allclose(below.imag, 0, atol=1e-15)

    @pytest.mark.parametrize("label", SPINS, ids=str)
    def test_lie_algebra(self, label):
        assert make_generators(label).lie_residual() < 1e-12

    @pytest.mark.parametrize("label", SPINS, ids=str)
    def test_casimir(self, label):
        assert make_generators(label).casimir_residual() < 1e-12

    def test_unit_undefined_at_zero(self):
        with pytest.raises(OutOfRange):
            make_generators(0).unit()


class TestCoherentState:
    def test_north_pole_is_highest_weight(self):
        state = coherent_state(make_generators(1), 0.0, 0.0, 0.0)
        assert same_ray(state, [0, 0, 1])

    def test_equator_magnitudes(self):
        state = coherent_state(make_generators(1), math.pi / 2, 0.0, 0.0)
        np.testing.assert_allclose(np.abs(state), [0.5, 1 / math.sqrt(2), 0.5], atol=1e-12)
        # the outer amplitudes share a sign and the middle one is real
        assert state[0] / state[2] == pytest.approx(1.0)
        assert abs((state[1] / state[0]).imag) < 1e-12

    def test_south_pole_is_lowest_weight(self):
        state = coherent_state(make_generators(1), math.pi, 0.0, 0.0)
        assert same_ray(state, [1, 0, 0])

    def test_eigenvector_property(self):
        rng = np.random.default_rng(11)
        for twice in range(1, 9):
            frame = make_generators(SpinLabel(twice))
            for theta, phi in rng.uniform([0, 0], [math.pi, 2 * math.pi], size=(100, 2)):
                state = coherent_state(frame, theta, phi)
                n = UnitVector3.from_angles(theta, phi).as_array()
                np.testing.assert_allclose(frame.dot(n) @ state, frame.spin * state, atol=1e-10)

    def test_psi_is_a_global_phase(self):
        frame = make_generators("3/2")
        a = coherent_state(frame, 1.1, 0.4, 0.0)
        b = coherent_state(frame, 1.1, 0.4, 2.3)
        assert same_ray(a, b)

    def test_closed_form_matches_rotations(self):
        frame = make_generators(2)
        grid = sphere_grid(4)
        states = coherent_states_on(frame, grid)
        for k in range(0, len(grid), 7):
            expected = coherent_state(frame, grid.theta[k], grid.phi[k])
            np.testing.assert_allclose(states[k], expected, atol=1e-12)


class TestUnitVector:
    def test_rejects_non_unit(self):
        with pytest.raises(OutOfRange):
            UnitVector3(1.0, 1.0, 0.0)

    def test_rejects_non_finite(self):
        with pytest.raises(OutOfRange):
            UnitVector3(float("nan"), 0.0, 0.0)
        with pytest.raises(OutOfRange):
            UnitVector3(float("inf"), 0.0, 0.0)


class TestWignerRotation:
    def test_zero_angle_is_identity(self):
        frame = make_generators("5/2")
        U = wigner_rotation(frame, UnitVector3.from_angles(0.3, 1.2), 0.0)
        np.testing.assert_allclose(U, np.eye(6), atol=1e-14)

    def test_spin_half_about_third_axis(self):
        U = wigner_rotation(make_generators("1/2"), UnitVector3.axis(3), math.pi, sign=1)
        np.testing.assert_allclose(U, np.diag([-1j, 1j]), atol=1e-14)

    @pytest.mark.parametrize("twice", [1, 2, 3, 4, 5])
    def test_full_turn(self, twice):
        frame = make_generators(SpinLabel(twice))
        U = wigner_rotation(frame, UnitVector3.from_angles(0.7, 2.1), 2 * math.pi)
        sign = 1 if twice % 2 == 0 else -1
        np.testing.assert_allclose(U, sign * np.eye(frame.dim), atol=1e-10)

    def test_signs_are_inverse(self):
        frame = make_generators(1)
        axis = UnitVector3.axis(2)
        product = wigner_rotation(frame, axis, 0.9, 1) @ wigner_rotation(frame, axis, 0.9, -1)
        np.testing.assert_allclose(product, np.eye(3), atol=1e-12)

    def test_bad_sign(self):
        with pytest.raises(OutOfRange):
            wigner_rotation(make_generators(1), UnitVector3.axis(1), 1.0, sign=2)

    def test_non_unit_axis_rejected(self):
        with pytest.raises(OutOfRange):
            UnitVector3(1.0, 1.0, 0.0)


class TestHermExp:
    def test_zero_is_identity(self):
        np.testing.assert_allclose(herm_exp(np.zeros((3, 3))), np.eye(3))

    def test_diagonal(self):
        sigma3 = np.diag([1.0, -1.0])
        np.testing.assert_allclose(herm_exp(sigma3, math.pi / 2), np.diag([1j, -1j]), atol=1e-15)

    def test_inverse_and_unitary(self):
        rng = np.random.default_rng(3)
        for dim in (2, 5, 9):
            H = random_hermitian(rng, dim)
            U = herm_exp(H)
            assert unitarity_residual(U) < 1e-10
            np.testing.assert_allclose(U @ herm_exp(H, -1.0), np.eye(dim), atol=1e-10)

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitian):
            herm_exp(np.array([[0, 1], [0, 0]]))


class TestResolutionOfIdentity:
    def test_spin_half(self):
        assert resolution_of_identity_residual(make_generators("1/2"), 8) < 1e-10

    def test_spin_three(self):
        assert resolution_of_identity_residual(make_generators(3), 16) < 1e-8

    @pytest.mark.parametrize("twice", range(1, 9))
    def test_exact_at_band_limit(self, twice):
        label = SpinLabel(twice)
        assert resolution_of_identity_residual(make_generators(label), label.dim) < 1e-8

    def test_low_order_returns_residual(self):
        residual = resolution_of_identity_residual(make_generators(4), 1)
        assert residual > 1e-3

    def test_grid_weights_cover_sphere(self):
        assert sphere_grid(6).weights.sum() == pytest.approx(4 * math.pi)
