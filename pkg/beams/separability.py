"""Partial transpose, the Werner T_min threshold and the explicit T=1 separable expansion."""

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from su2.errors import DimensionMismatch, OutOfRange, Unbounded
from su2.spin import SpinLabel

from .measures import mixedness
from .mode_matrix import ModeMatrix
from .states import werner_lower_bound, werner_state

logger = logging.getLogger(__name__)

PPT_TOL = 1e-12


def partial_transpose(M: ModeMatrix, dims: tuple[int, int]) -> np.ndarray:
    """Transpose on the second tensor factor of a dims[0] ⊗ dims[1] matrix."""
    d_a, d_b = dims
    if d_a * d_b != M.dim:
        raise DimensionMismatch(f"dims {dims} do not factor matrix dim {M.dim}")
    tensor = M.entries.reshape(d_a, d_b, d_a, d_b)
    return tensor.transpose(0, 3, 2, 1).reshape(M.dim, M.dim)


def ppt_min_eig(M: ModeMatrix, dims: tuple[int, int]) -> float:
    return float(np.linalg.eigvalsh(partial_transpose(M, dims))[0])


def is_ppt(M: ModeMatrix, dims: tuple[int, int], tol: float = PPT_TOL) -> bool:
    """PPT test; decides separability for 2⊗2 and 2⊗3, necessary-only beyond."""
    return ppt_min_eig(M, dims) >= -tol


def werner_separable_bound(T) -> float:
    """T/(T+1): the Werner family at spin T is separable for |α| up to this value."""
    spin = SpinLabel.of(T).value
    return spin / (spin + 1)


def werner_t_min(alpha: float) -> SpinLabel:
    """Smallest half-integer T >= 1/2 with T/(T+1) >= |α|."""
    a = abs(alpha)
    if a >= 1:
        raise Unbounded(
            f"|α|={a} needs an infinite-dimensional separable equivalent"
        )
    threshold = a / (1 - a)
    twice = max(1, math.ceil(2 * threshold - 1e-9))
    return SpinLabel(twice)


@dataclass(frozen=True, eq=False)
class SeparableEnsemble:
    """Weighted product pairs (left qubit state, right (2T+1) state)."""

    weights: np.ndarray = field(repr=False)
    left: list = field(repr=False)
    right: list = field(repr=False)

    def __post_init__(self):
        if not (len(self.weights) == len(self.left) == len(self.right)):
            raise DimensionMismatch("ensemble member lists differ in length")
        if abs(float(np.sum(self.weights)) - 1.0) > 1e-12:
            raise OutOfRange(f"ensemble weights sum to {np.sum(self.weights)}")

    def __len__(self) -> int:
        return len(self.weights)

    def mixture(self) -> ModeMatrix:
        total = sum(
            w * np.kron(np.outer(a, a.conj()), np.outer(b, b.conj()))
            for w, a, b in zip(self.weights, self.left, self.right)
        )
        return ModeMatrix(total)


def separable_decomposition_T1() -> SeparableEnsemble:
    """Six equal-weight product beams whose mixture is werner_state(1/2, 1).

    Polarisation basis (|H), |V)), OAM basis (|LG_{0-1}), |LG_{00}), |LG_{01})).
    """
    s = 1 / math.sqrt(2)
    H = np.array([1, 0], dtype=complex)
    V = np.array([0, 1], dtype=complex)
    plus, minus = s * (H + V), s * (H - V)
    right_circ, left_circ = s * (H + 1j * V), s * (H - 1j * V)

    psi_1 = np.array([0, 0, 1], dtype=complex)
    psi_2 = np.array([1, 0, 0], dtype=complex)
    psi_3p = np.array([0.5, s, 0.5], dtype=complex)
    psi_3m = np.array([0.5, -s, 0.5], dtype=complex)
    psi_4p = np.array([0.5, 1j * s, -0.5], dtype=complex)
    psi_4m = np.array([0.5, -1j * s, -0.5], dtype=complex)

    return SeparableEnsemble(
        weights=np.full(6, 1 / 6),
        left=[V, H, minus, plus, right_circ, left_circ],
        right=[psi_1, psi_2, psi_3p, psi_3m, psi_4p, psi_4m],
    )


def werner_table(alphas, spins) -> list[dict]:
    """One row per (α, T): separability, PPT spectrum edge, mixedness and T_min.

    Every (α, T) pair is checked before any row is computed.
    """
    alphas = [float(a) for a in alphas]
    labels = [SpinLabel.of(T) for T in spins]
    for label in labels:
        if label.twice < 1:
            raise OutOfRange(f"Werner tables need T >= 1/2, got T={label}")
    for alpha in alphas:
        for label in labels:
            lower = werner_lower_bound(label)
            if not lower - 1e-12 <= alpha <= 1 + 1e-12:
                raise OutOfRange(f"α={alpha} outside [{lower:.6f}, 1] for T={label}")
    logger.debug("Werner table over %d α values and spins %s", len(alphas), [str(l) for l in labels])

    rows = []
    for alpha in alphas:
        try:
            t_min = str(werner_t_min(alpha))
        except Unbounded:
            t_min = "infinite"
        for label in labels:
            state = werner_state(alpha, label)
            rows.append({
                "alpha": float(alpha),
                "T": str(label),
                "separable": abs(alpha) <= werner_separable_bound(label) + 1e-12,
                "ppt_min_eig": ppt_min_eig(state, (2, label.dim)),
                "mixedness": mixedness(state),
                "t_min": t_min,
            })
    return rows
