"""Husimi Q-representation on the sphere and the equivalence test built on it."""

import logging
from dataclasses import dataclass, field

import numpy as np

from su2.coherent import SphereGrid, coherent_states_on, sphere_grid
from su2.errors import DimensionMismatch
from su2.spin import SU2Frame, make_generators

from .mode_matrix import ModeMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class QFunctionGrid:
    grid: SphereGrid
    values: np.ndarray = field(repr=False)

    def total(self) -> float:
        """∮ F dΩ, equal to 1 for a unit-trace matrix."""
        return float(np.sum(self.grid.weights * self.values))


def q_function(M: ModeMatrix, frame: SU2Frame, grid: SphereGrid) -> QFunctionGrid:
    """F(n̂) = (2T+1)/(4π) (n̂|M|n̂) at every grid node."""
    if M.dim != frame.dim:
        raise DimensionMismatch(f"matrix dim {M.dim} does not match frame dim {frame.dim}")
    states = coherent_states_on(frame, grid)
    diag = np.einsum("ka,ab,kb->k", states.conj(), M.entries, states).real
    return QFunctionGrid(grid, frame.dim / (4 * np.pi) * diag)


def pauli_coherent_states(grid: SphereGrid) -> np.ndarray:
    """Qubit coherent states in the (H, V) order of PAULI, shape (nodes, 2).

    The T=1/2 frame lists m=-1/2 first; reversing it gives the eigenvectors
    of σ·n̂ with eigenvalue +1.
    """
    return coherent_states_on(make_generators("1/2"), grid)[:, ::-1]


def bipartite_q_function(M: ModeMatrix, T, order: int) -> np.ndarray:
    """F(m̂, n̂) for a matrix on 2 ⊗ (2T+1), shape (nodes, nodes).

    Normalised as 2(2T+1)/(4π)² (m̂, n̂|M|m̂, n̂) so that a
    general_two_dof_state gives (1/(4π)²)[1 + m̂·p + n̂·q + t_ij m_i n_j].
    """
    frame = make_generators(T)
    if M.dim != 2 * frame.dim:
        raise DimensionMismatch(f"matrix dim {M.dim} is not 2·{frame.dim}")
    grid = sphere_grid(order)
    left = pauli_coherent_states(grid)
    right = coherent_states_on(frame, grid)
    tensor = M.entries.reshape(2, frame.dim, 2, frame.dim)
    diag = np.einsum(
        "ma,nb,abcd,mc,nd->mn", left.conj(), right.conj(), tensor, left, right
    ).real
    return 2 * frame.dim / (4 * np.pi) ** 2 * diag


def equivalence_check(M1: ModeMatrix, T1, M2: ModeMatrix, T2, tol: float = 1e-9) -> bool:
    """True when M1 and M2 share the same Q-function on a common grid."""
    frame1, frame2 = make_generators(T1), make_generators(T2)
    order = int(2 * max(frame1.spin, frame2.spin) + 1)
    grid = sphere_grid(order)
    q1 = q_function(M1, frame1, grid).values
    q2 = q_function(M2, frame2, grid).values
    gap = float(np.max(np.abs(q1 - q2)))
    logger.debug("Q-function gap between T=%s and T=%s: %.3e", frame1.label, frame2.label, gap)
    return gap <= tol
