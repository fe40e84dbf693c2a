"""SU(2) coherent states, Wigner rotations and sphere quadrature."""

import logging
from dataclasses import dataclass

import numpy as np
from scipy.special import comb

from .errors import OutOfRange
from .linalg import herm_exp
from .spin import SU2Frame

logger = logging.getLogger(__name__)

UNIT_TOL = 1e-12


@dataclass(frozen=True)
class UnitVector3:
    n1: float
    n2: float
    n3: float

    def __post_init__(self):
        norm = np.sqrt(self.n1**2 + self.n2**2 + self.n3**2)
        if not np.isfinite(norm) or abs(norm - 1.0) > UNIT_TOL:
            raise OutOfRange(f"axis must have unit length, got |n| = {norm:.15f}")

    @classmethod
    def from_angles(cls, theta: float, phi: float) -> "UnitVector3":
        return cls(
            float(np.sin(theta) * np.cos(phi)),
            float(np.sin(theta) * np.sin(phi)),
            float(np.cos(theta)),
        )

    @classmethod
    def normalised(cls, vector) -> "UnitVector3":
        v = np.asarray(vector, dtype=float)
        norm = np.linalg.norm(v)
        if norm == 0:
            raise OutOfRange("cannot normalise the zero vector")
        return cls(*(v / norm))

    @classmethod
    def axis(cls, index: int) -> "UnitVector3":
        """Basis vector ê_1, ê_2 or ê_3."""
        v = np.zeros(3)
        v[index - 1] = 1.0
        return cls(*v)

    def as_array(self) -> np.ndarray:
        return np.array([self.n1, self.n2, self.n3])


def highest_weight(frame: SU2Frame) -> np.ndarray:
    """|T3 = +T>, the last basis vector."""
    state = np.zeros(frame.dim, dtype=complex)
    state[-1] = 1.0
    return state


def coherent_state(frame: SU2Frame, theta: float, phi: float, psi: float = 0.0) -> np.ndarray:
    """e^{-iT3 φ} e^{-iT2 θ} e^{-iT3 ψ} |T3=+T>."""
    state = herm_exp(frame.T3, -psi) @ highest_weight(frame)
    state = herm_exp(frame.T2, -theta) @ state
    state = herm_exp(frame.T3, -phi) @ state
    return state / np.linalg.norm(state)


def wigner_rotation(frame: SU2Frame, axis: UnitVector3, angle: float, sign: int = 1) -> np.ndarray:
    """exp(sign · i (T·n̂) · angle); sign is +1 or -1."""
    if sign not in (1, -1):
        raise OutOfRange(f"sign must be +1 or -1, got {sign}")
    return herm_exp(frame.dot(axis.as_array()), sign * angle)


@dataclass(frozen=True, eq=False)
class SphereGrid:
    """Gauss-Legendre nodes in cos θ times a uniform φ trapezoid.

    ``weights`` integrate over the solid angle: sum(weights) = 4π.
    """

    theta: np.ndarray
    phi: np.ndarray
    weights: np.ndarray

    def __len__(self) -> int:
        return self.theta.size

    def directions(self) -> np.ndarray:
        """Unit vectors n̂ at every node, shape (nodes, 3)."""
        return np.stack(
            [
                np.sin(self.theta) * np.cos(self.phi),
                np.sin(self.theta) * np.sin(self.phi),
                np.cos(self.theta),
            ],
            axis=-1,
        )


def sphere_grid(order: int) -> SphereGrid:
    """Product quadrature with ``order`` polar and 2·order+1 azimuthal nodes."""
    if order < 1:
        raise OutOfRange(f"quadrature order must be >= 1, got {order}")
    x, w = np.polynomial.legendre.leggauss(order)
    n_phi = 2 * order + 1
    phi = 2 * np.pi * np.arange(n_phi) / n_phi
    theta_grid, phi_grid = np.meshgrid(np.arccos(x), phi, indexing="ij")
    weight_grid = np.outer(w, np.full(n_phi, 2 * np.pi / n_phi))
    return SphereGrid(theta_grid.ravel(), phi_grid.ravel(), weight_grid.ravel())


def coherent_states_on(frame: SU2Frame, grid: SphereGrid) -> np.ndarray:
    """Coherent states at every grid node, shape (nodes, dim).

    Uses the closed form of the rotated highest weight,
    <m|n̂> = sqrt(C(2T, T+m)) cos(θ/2)^{T+m} sin(θ/2)^{T-m} e^{-imφ},
    which equals coherent_state(frame, θ, φ, 0).
    """

    m = frame.label.weights()
    twice = frame.label.twice
    up = np.rint(frame.spin + m).astype(int)
    down = twice - up
    half = grid.theta[:, None] / 2
    amplitude = np.sqrt(comb(twice, up)) * np.cos(half) ** up * np.sin(half) ** down
    return amplitude * np.exp(-1j * np.outer(grid.phi, m))


def resolution_of_identity_residual(frame: SU2Frame, quadrature_order: int) -> float:
    """‖(2T+1)/(4π) ∮ |n̂)(n̂| dΩ - 1‖_F on the product quadrature."""
    grid = sphere_grid(quadrature_order)
    states = coherent_states_on(frame, grid)
    integral = (states.T * grid.weights) @ states.conj()
    integral *= frame.dim / (4 * np.pi)
    residual = float(np.linalg.norm(integral - frame.identity()))
    logger.debug("Overcompleteness residual T=%s order=%d: %.3e", frame.label, quadrature_order, residual)
    return residual
