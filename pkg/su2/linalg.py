"""Small dense Hermitian linear algebra: checks and matrix exponentials."""

import numpy as np

from .errors import DimensionMismatch, NotHermitian

HERMITIAN_TOL = 1e-10


def hermiticity_residual(H: np.ndarray) -> float:
    H = np.asarray(H)
    return float(np.max(np.abs(H - H.conj().T))) if H.size else 0.0


def require_square(M: np.ndarray, name: str = "matrix") -> np.ndarray:
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DimensionMismatch(f"{name} must be square, got shape {M.shape}")
    return M


def require_hermitian(H: np.ndarray, tol: float = HERMITIAN_TOL) -> np.ndarray:
    H = require_square(H, "Hermitian operator")
    residual = hermiticity_residual(H)
    if residual > tol:
        raise NotHermitian(f"symmetry residual {residual:.3e} exceeds {tol:.1e}")
    return H


def herm_exp(H: np.ndarray, scale: float = 1.0) -> np.ndarray:
    """exp(i·scale·H) through the eigendecomposition of Hermitian H.

    ``scale`` is real. Of the unit-modulus prefactors only ±1 keep the result
    unitary, and those are carried by the sign of ``scale``.
    """
    H = require_hermitian(H)
    E, V = np.linalg.eigh((H + H.conj().T) / 2)
    return (V * np.exp(1j * scale * E)) @ V.conj().T


def unitarity_residual(U: np.ndarray) -> float:
    U = require_square(U, "unitary")
    return float(np.linalg.norm(U.conj().T @ U - np.eye(U.shape[0])))


def same_ray(a: np.ndarray, b: np.ndarray, tol: float = 1e-10) -> bool:
    """True when unit vectors a and b differ only by a global phase."""
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        return False
    return abs(abs(np.vdot(a, b)) - 1.0) < tol
