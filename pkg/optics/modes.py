"""Laguerre-Gauss modes at the waist plane, sampled on square grids."""

import logging
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import eval_genlaguerre

from su2.errors import LengthMismatch, OutOfRange
from su2.spin import SpinLabel

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LGModeSpec:
    p: int
    l: int
    w: float = 1.0

    def __post_init__(self):
        if self.p < 0:
            raise OutOfRange(f"radial index p must be >= 0, got {self.p}")
        if self.w <= 0:
            raise OutOfRange(f"waist must be positive, got {self.w}")

    def __str__(self) -> str:
        return f"LG_{self.p},{self.l}"


@dataclass(frozen=True)
class GridSpec:
    """Square transverse grid; ``extent`` is the half-width in waist units."""

    extent: float = 3.0
    resolution: int = 512

    def __post_init__(self):
        if self.resolution < 2:
            raise OutOfRange(f"resolution must be >= 2, got {self.resolution}")
        if self.extent <= 0:
            raise OutOfRange(f"extent must be positive, got {self.extent}")

    @property
    def pixel(self) -> float:
        return 2 * self.extent / self.resolution

    @property
    def pixel_area(self) -> float:
        return self.pixel**2

    def axis(self) -> np.ndarray:
        """Pixel centres, symmetric about the origin."""
        return (np.arange(self.resolution) + 0.5) * self.pixel - self.extent

    def coordinates(self) -> tuple[np.ndarray, np.ndarray]:
        """(x, y) arrays; row index follows y, column index follows x."""
        axis = self.axis()
        return np.meshgrid(axis, axis, indexing="xy")

    def to_dict(self) -> dict:
        return {"extent": self.extent, "resolution": self.resolution}


@dataclass(frozen=True, eq=False)
class FieldGrid:
    spec: GridSpec
    values: np.ndarray = field(repr=False)

    def power(self) -> float:
        return float(np.sum(np.abs(self.values) ** 2) * self.spec.pixel_area)

    def inner(self, other: "FieldGrid") -> complex:
        """Grid approximation of ∫ conj(self) · other dA."""
        return complex(np.sum(self.values.conj() * other.values) * self.spec.pixel_area)

    def intensity(self) -> "IntensityImage":
        return IntensityImage(self.spec, np.abs(self.values) ** 2)


@dataclass(frozen=True, eq=False)
class IntensityImage:
    spec: GridSpec
    values: np.ndarray = field(repr=False)

    def total(self) -> float:
        return float(np.sum(self.values) * self.spec.pixel_area)

    def peak(self) -> float:
        """Largest magnitude, max |I|."""
        return float(np.max(np.abs(self.values)))


def lg_amplitude(spec: LGModeSpec, x, y) -> np.ndarray:
    """Unit-power LG_{pl} at z=0 evaluated at arbitrary points."""
    x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
    r2 = (x**2 + y**2) / spec.w**2
    phase = np.exp(1j * spec.l * np.arctan2(y, x))
    order = abs(spec.l)
    norm = math.sqrt(2 * math.factorial(spec.p) / (math.pi * math.factorial(spec.p + order))) / spec.w
    radial = (np.sqrt(2 * r2)) ** order * eval_genlaguerre(spec.p, order, 2 * r2) * np.exp(-r2)
    return norm * radial * phase


def lg_field(spec: LGModeSpec, grid: GridSpec) -> FieldGrid:
    x, y = grid.coordinates()
    return FieldGrid(grid, lg_amplitude(spec, x, y))


def oam_basis(T, radial: int = 0, waist: float = 1.0) -> list[LGModeSpec]:
    """LG_{p,l} for l = -T..T, matching the T3 eigenbasis order."""
    label = SpinLabel.of(T)
    if not label.is_integer:
        raise OutOfRange(f"OAM bases need integer T, got T={label}")
    return [LGModeSpec(radial, int(l), waist) for l in label.weights()]


def ladder_basis(N: int, waist: float = 1.0) -> list[LGModeSpec]:
    """LG_{0,i} for i = 0..N-1."""
    return [LGModeSpec(0, i, waist) for i in range(N)]


def superpose_at(coefficients, basis: list[LGModeSpec], x, y) -> np.ndarray:
    coefficients = np.asarray(coefficients, dtype=complex)
    if coefficients.shape != (len(basis),):
        raise LengthMismatch(
            f"{coefficients.size} coefficients for {len(basis)} basis modes"
        )
    x = np.asarray(x, dtype=float)
    total = np.zeros(x.shape, dtype=complex)
    for c, spec in zip(coefficients, basis):
        if c != 0:
            total += c * lg_amplitude(spec, x, y)
    return total


def superpose(coefficients, basis: list[LGModeSpec], grid: GridSpec) -> FieldGrid:
    coefficients = np.asarray(coefficients, dtype=complex)
    norm = np.linalg.norm(coefficients)
    if abs(norm - 1.0) > 1e-10:
        raise OutOfRange(f"coefficients must have unit norm, got {norm:.12f}")
    x, y = grid.coordinates()
    return FieldGrid(grid, superpose_at(coefficients, basis, x, y))
