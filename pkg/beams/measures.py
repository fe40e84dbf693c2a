"""Mixedness, c-entropy and the 2×2 polarisation matrix."""

import logging

import numpy as np

from su2.errors import LengthMismatch, ZeroIntensity

from .mode_matrix import ModeMatrix

logger = logging.getLogger(__name__)


def mixedness(M: ModeMatrix) -> float:
    """1 - Tr(M²)."""
    return 1.0 - M.purity()


def c_entropy(M: ModeMatrix) -> float:
    """-Σ λ log λ in nats, with 0·log 0 = 0."""
    eigenvalues = np.clip(np.linalg.eigvalsh(M.entries), 0.0, None)
    nonzero = eigenvalues[eigenvalues > 1e-15]
    return float(-np.sum(nonzero * np.log(nonzero)))


def polarization_matrix_from_samples(Ex, Ey) -> ModeMatrix:
    """Time-averaged J_ij = <E_i* E_j> / I from sampled field components."""
    Ex = np.atleast_1d(np.asarray(Ex, dtype=complex))
    Ey = np.atleast_1d(np.asarray(Ey, dtype=complex))
    if Ex.shape != Ey.shape or Ex.ndim != 1:
        raise LengthMismatch(f"field series shapes {Ex.shape} and {Ey.shape} differ")
    if Ex.size == 0:
        raise LengthMismatch("field series are empty")

    fields = np.stack([Ex, Ey])
    correlations = fields.conj() @ fields.T / Ex.size
    intensity = float(np.trace(correlations).real)
    if intensity <= 0:
        raise ZeroIntensity("both field components vanish identically")
    return ModeMatrix(correlations / intensity, role="coherent-mode")


def degree_of_polarization(J: ModeMatrix) -> float:
    """√(1 - 4 det J) for a 2×2 polarisation matrix."""
    det = float(np.linalg.det(J.entries).real)
    return float(np.sqrt(max(0.0, 1.0 - 4.0 * det)))
