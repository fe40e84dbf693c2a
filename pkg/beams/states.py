"""Equivalent states and observables, and the ½⊗T two-degree-of-freedom family."""

import logging
from dataclasses import dataclass, field

import numpy as np

from su2.coherent import UnitVector3
from su2.errors import NotPositive, OutOfRange
from su2.spin import SpinLabel, make_generators

from .mode_matrix import PAULI, BlochVector, ModeMatrix

logger = logging.getLogger(__name__)


def equivalent_state(p, T) -> ModeMatrix:
    """J^T(p) = (1 + T̂·p)/(2T+1), the (2T+1)-dimensional equivalent of ρ^{1/2}(p)."""
    p = BlochVector.of(p)
    frame = make_generators(T)
    if frame.spin == 0:
        raise OutOfRange("equivalent states need T >= 1/2")
    matrix = (frame.identity() + frame.dot(p.as_array()) / frame.spin) / frame.dim
    return ModeMatrix(matrix)


@dataclass(frozen=True, eq=False)
class EquivalentObservable:
    """(3T/(T+1)) T̂·m̂ with its spectral projectors.

    ``projectors`` and ``eigenvalues`` come from the eigen-resolution of the
    operator; for T=1 they are the three closed-form projectors
    P1 = ½(T·m̂)(T·m̂+1), P2 = ½(T·m̂)(T·m̂-1), P3 = 1-(T·m̂)², in that order.
    """

    operator: np.ndarray = field(repr=False)
    eigenvalues: np.ndarray = field(repr=False)
    projectors: list = field(repr=False)

    def reconstruct(self) -> np.ndarray:
        return sum(v * P for v, P in zip(self.eigenvalues, self.projectors))


def equivalent_observable(m: UnitVector3, T) -> EquivalentObservable:
    frame = make_generators(T)
    spin = frame.spin
    if spin == 0:
        raise OutOfRange("equivalent observables need T >= 1/2")
    Tm = frame.dot(m.as_array())
    operator = (3 * spin / (spin + 1)) * Tm / spin

    if frame.label.twice == 2:
        one = frame.identity()
        projectors = [
            Tm @ (Tm + one) / 2,
            Tm @ (Tm - one) / 2,
            one - Tm @ Tm,
        ]
        eigenvalues = np.array([1.5, -1.5, 0.0])
    else:
        # T·m̂ has the non-degenerate spectrum -T..T
        values, vectors = np.linalg.eigh(operator)
        projectors = [np.outer(v, v.conj()) for v in vectors.T]
        eigenvalues = values
    return EquivalentObservable(operator, eigenvalues, projectors)


@dataclass(frozen=True, eq=False)
class BipartiteBloch:
    p: BlochVector
    q: BlochVector
    t: np.ndarray = field(repr=False)

    @classmethod
    def of(cls, p, q, t) -> "BipartiteBloch":
        t = np.asarray(t, dtype=float)
        if t.shape != (3, 3):
            raise OutOfRange(f"correlation tensor must be 3x3, got {t.shape}")
        return cls(BlochVector.of(p), BlochVector.of(q), t)


def general_two_dof_state(b: BipartiteBloch, T) -> ModeMatrix:
    """(1/(2(2T+1)))[1 + σ^A·p + T̂^B·q + t_ij σ_i^A T̂_j^B] on 2 ⊗ (2T+1)."""
    frame = make_generators(T)
    unit = frame.unit()
    dim_b = frame.dim
    one_a, one_b = np.eye(2), np.eye(dim_b)

    matrix = np.kron(one_a, one_b).astype(complex)
    for i in range(3):
        matrix += b.p.as_array()[i] * np.kron(PAULI[i], one_b)
        matrix += b.q.as_array()[i] * np.kron(one_a, unit[i])
        for j in range(3):
            if b.t[i, j]:
                matrix += b.t[i, j] * np.kron(PAULI[i], unit[j])
    matrix /= 2 * dim_b

    smallest = float(np.linalg.eigvalsh(matrix)[0])
    if smallest < -1e-10:
        raise NotPositive(
            f"(p, q, t) is not physical at T={frame.label}: min eigenvalue {smallest:.3e}"
        )
    return ModeMatrix(matrix)


def werner_lower_bound(T) -> float:
    """-T/(T+1), the smallest α for which the Werner matrix is positive."""
    spin = SpinLabel.of(T).value
    return -spin / (spin + 1)


def werner_state(alpha: float, T) -> ModeMatrix:
    """(1/(2(2T+1)))(1 - α σ^A·T̂^B), valid for α in [-T/(T+1), 1]."""
    lower = werner_lower_bound(T)
    if alpha < lower - 1e-12 or alpha > 1 + 1e-12:
        raise OutOfRange(f"α={alpha} outside [{lower:.6f}, 1] for T={SpinLabel.of(T)}")
    t = -alpha * np.eye(3)
    return general_two_dof_state(BipartiteBloch.of((0, 0, 0), (0, 0, 0), t), T)
