"""Intensity patterns of coherent, mixed and noise-contrast beams."""

import logging
from dataclasses import dataclass, field

import numpy as np

from beams.mode_matrix import ModeMatrix
from su2.coherent import coherent_state
from su2.errors import DimensionMismatch, OutOfRange
from su2.spin import make_generators

from .modes import (
    FieldGrid,
    GridSpec,
    IntensityImage,
    LGModeSpec,
    ladder_basis,
    lg_field,
    oam_basis,
    superpose,
)

logger = logging.getLogger(__name__)


def coherent_beam_intensity(T, theta: float, phi: float, grid: GridSpec, waist: float = 1.0) -> IntensityImage:
    """|Σ_l c_l LG_{0l}|² for the SU(2) coherent beam |n̂(θ, φ)) over l = -T..T."""
    frame = make_generators(T)
    state = coherent_state(frame, theta, phi, 0.0)
    return superpose(state, oam_basis(frame.label, waist=waist), grid).intensity()


@dataclass(frozen=True, eq=False)
class SpectralComponents:
    """Eigenvalues (descending) with the intensity of each eigenmode."""

    eigenvalues: np.ndarray = field(repr=False)
    images: list = field(repr=False)

    def mixture(self) -> IntensityImage:
        spec = self.images[0].spec
        values = sum(w * image.values for w, image in zip(self.eigenvalues, self.images))
        return IntensityImage(spec, values)


def spectral_components(M: ModeMatrix, basis: list[LGModeSpec], grid: GridSpec) -> SpectralComponents:
    if M.dim != len(basis):
        raise DimensionMismatch(f"matrix dim {M.dim} does not match {len(basis)} basis modes")
    eigenvalues, vectors = M.eigh()
    order = np.argsort(eigenvalues)[::-1]
    eigenvalues = np.clip(eigenvalues[order], 0.0, None)
    vectors = vectors[:, order]

    fields = [lg_field(spec, grid).values for spec in basis]
    images = []
    for k in range(M.dim):
        values = sum(c * f for c, f in zip(vectors[:, k], fields))
        images.append(IntensityImage(grid, np.abs(values) ** 2))
    return SpectralComponents(eigenvalues, images)


def mixed_beam_intensity(M: ModeMatrix, basis: list[LGModeSpec], grid: GridSpec) -> IntensityImage:
    """Σ_k λ_k |eigenmode k|², the incoherent eigen-mixture."""
    return spectral_components(M, basis, grid).mixture()


def i_diff(alpha: float, theta: float, grid: GridSpec, waist: float = 1.0) -> IntensityImage:
    """Intensity change of the two-mode OAM beam relative to the fully mixed channel."""
    if not 0.0 <= alpha <= 1.0:
        raise OutOfRange(f"α must lie in [0, 1], got {alpha}")
    u0 = lg_field(LGModeSpec(0, 0, waist), grid).values
    u1 = lg_field(LGModeSpec(0, 1, waist), grid).values
    c, s = np.cos(theta / 2), np.sin(theta / 2)

    bright = np.abs(c * u0 + s * u1) ** 2
    dark = np.abs(-s * u0 + c * u1) ** 2
    # bright + dark is the fully mixed background (|u0|² + |u1|²), so
    # (1+α)/2·bright + (1-α)/2·dark - background reduces to:
    values = alpha / 2 * (bright - dark)
    return IntensityImage(grid, values)


def modal_readout(beam: FieldGrid, basis: list[LGModeSpec]) -> np.ndarray:
    """Normalised power in each basis mode, |<LG_k, beam>|² / Σ."""
    powers = np.array([
        abs(lg_field(spec, beam.spec).inner(beam)) ** 2 for spec in basis
    ])
    total = powers.sum()
    if total <= 0:
        raise OutOfRange("beam has no power in the readout basis")
    return powers / total


def classifier_beam(state, grid: GridSpec, waist: float = 1.0) -> FieldGrid:
    """Σ_i μ_i |LG_{0i}) prepared directly from a quNit state vector."""
    state = np.asarray(state, dtype=complex)
    return superpose(state, ladder_basis(state.size, waist), grid)
