"""Coherent-mode / density matrices with their physicality checks."""

import logging
from dataclasses import dataclass, field

import numpy as np

from su2.errors import DimensionMismatch, NotHermitian, NotPositive, OutOfRange
from su2.linalg import hermiticity_residual, require_square

logger = logging.getLogger(__name__)

MATRIX_TOL = 1e-10
BLOCH_TOL = 1e-12

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


@dataclass(frozen=True, eq=False)
class ModeMatrix:
    """Hermitian, positive semidefinite, unit-trace matrix.

    ``role`` is "density" for quantum states and "coherent-mode" for
    classical beams; the algebra is the same.
    """

    entries: np.ndarray = field(repr=False)
    role: str = "coherent-mode"

    def __post_init__(self):
        M = require_square(np.asarray(self.entries, dtype=complex), "mode matrix")
        residual = hermiticity_residual(M)
        if residual > MATRIX_TOL:
            raise NotHermitian(f"mode matrix not Hermitian (residual {residual:.3e})")
        M = (M + M.conj().T) / 2
        trace = np.trace(M).real
        if abs(trace - 1.0) > MATRIX_TOL:
            raise OutOfRange(f"mode matrix trace is {trace:.12f}, expected 1")
        smallest = float(np.linalg.eigvalsh(M)[0])
        if smallest < -MATRIX_TOL:
            raise NotPositive(f"mode matrix has negative eigenvalue {smallest:.3e}")
        M.setflags(write=False)
        object.__setattr__(self, "entries", M)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def eigh(self) -> tuple[np.ndarray, np.ndarray]:
        return np.linalg.eigh(self.entries)

    def purity(self) -> float:
        return float(np.trace(self.entries @ self.entries).real)

    def expectation(self, operator: np.ndarray) -> float:
        operator = np.asarray(operator)
        if operator.shape != self.entries.shape:
            raise DimensionMismatch(
                f"operator shape {operator.shape} does not match matrix dim {self.dim}"
            )
        return float(np.trace(self.entries @ operator).real)

    def conjugated(self, U: np.ndarray) -> "ModeMatrix":
        """U M U†."""
        return ModeMatrix(U @ self.entries @ U.conj().T, role=self.role)

    def distance(self, other: "ModeMatrix") -> float:
        """Frobenius distance."""
        if other.dim != self.dim:
            raise DimensionMismatch(f"dims {self.dim} and {other.dim} differ")
        return float(np.linalg.norm(self.entries - other.entries))

    @classmethod
    def maximally_mixed(cls, dim: int, role: str = "coherent-mode") -> "ModeMatrix":
        return cls(np.eye(dim, dtype=complex) / dim, role=role)

    @classmethod
    def pure(cls, state, role: str = "coherent-mode") -> "ModeMatrix":
        v = np.asarray(state, dtype=complex)
        v = v / np.linalg.norm(v)
        return cls(np.outer(v, v.conj()), role=role)


@dataclass(frozen=True)
class BlochVector:
    p1: float
    p2: float
    p3: float

    def __post_init__(self):
        if not np.all(np.isfinite(self.as_array())):
            raise OutOfRange(f"Bloch vector components must be finite, got {self.as_array().tolist()}")
        if self.norm() > 1 + BLOCH_TOL:
            raise OutOfRange(f"Bloch vector length {self.norm():.12f} exceeds 1")

    @classmethod
    def of(cls, values) -> "BlochVector":
        if isinstance(values, BlochVector):
            return values
        p1, p2, p3 = (float(v) for v in values)
        return cls(p1, p2, p3)

    @classmethod
    def clipped(cls, values, tol: float) -> "BlochVector":
        """Vector whose length may exceed 1 by at most ``tol``; such vectors are rescaled to unit length."""
        v = np.asarray(values, dtype=float)
        if not np.all(np.isfinite(v)):
            raise OutOfRange(f"Bloch vector components must be finite, got {v.tolist()}")
        norm = float(np.linalg.norm(v))
        if norm > 1 + tol:
            raise OutOfRange(f"Bloch vector length {norm:.12f} exceeds 1 by more than {tol:.1e}")
        if norm > 1:
            v = v / norm
        return cls(*(float(c) for c in v))

    def as_array(self) -> np.ndarray:
        return np.array([self.p1, self.p2, self.p3])

    def norm(self) -> float:
        return float(np.sqrt(self.p1**2 + self.p2**2 + self.p3**2))


def qubit_matrix(p: BlochVector) -> ModeMatrix:
    """ρ^{1/2}(p) = (1 + σ·p)/2."""
    p = BlochVector.of(p)
    sigma_p = sum(c * s for c, s in zip(p.as_array(), PAULI))
    return ModeMatrix((np.eye(2) + sigma_p) / 2)
