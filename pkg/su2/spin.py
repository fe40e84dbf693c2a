"""Spin labels and SU(2) generator frames."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import OutOfRange

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class SpinLabel:
    """Half-integer spin T, stored as the integer 2T so equality is exact."""

    twice: int

    def __post_init__(self):
        if int(self.twice) != self.twice or self.twice < 0:
            raise OutOfRange(f"2T must be a non-negative integer, got {self.twice}")
        object.__setattr__(self, "twice", int(self.twice))

    @classmethod
    def of(cls, value) -> "SpinLabel":
        """Build from a number or string such as ``1``, ``1.5`` or ``"3/2"``."""
        if isinstance(value, SpinLabel):
            return value
        try:
            twice = Fraction(str(value).strip()) * 2
        except (ValueError, ZeroDivisionError) as e:
            raise OutOfRange(f"cannot read T from {value!r}") from e
        if twice.denominator != 1:
            raise OutOfRange(f"T must be a half-integer, got {value}")
        return cls(int(twice))

    @property
    def value(self) -> float:
        return self.twice / 2

    @property
    def dim(self) -> int:
        return self.twice + 1

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def weights(self) -> np.ndarray:
        """T3 eigenvalues in basis order, ascending from -T to +T."""
        return np.arange(self.dim) - self.value

    def __str__(self) -> str:
        return str(self.twice // 2) if self.is_integer else f"{self.twice}/2"


@dataclass(frozen=True, eq=False)
class SU2Frame:
    """The generator triple (T1, T2, T3) of the (2T+1)-dimensional irrep."""

    label: SpinLabel
    T1: np.ndarray = field(repr=False)
    T2: np.ndarray = field(repr=False)
    T3: np.ndarray = field(repr=False)

    @property
    def dim(self) -> int:
        return self.label.dim

    @property
    def spin(self) -> float:
        return self.label.value

    def generators(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return self.T1, self.T2, self.T3

    def dot(self, n) -> np.ndarray:
        """T·n for a real 3-vector n."""
        n1, n2, n3 = np.asarray(n, dtype=float)
        return n1 * self.T1 + n2 * self.T2 + n3 * self.T3

    def unit(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Normalised generators T̂_i = T_i / T."""
        T = self.spin
        if T == 0:
            raise OutOfRange("T̂ = T/T is undefined for T = 0")
        return self.T1 / T, self.T2 / T, self.T3 / T

    def identity(self) -> np.ndarray:
        return np.eye(self.dim, dtype=complex)

    def lie_residual(self) -> float:
        """Largest Frobenius residual of [Ti, Tj] = i ε_ijk Tk."""
        T1, T2, T3 = self.generators()
        pairs = [(T1, T2, T3), (T2, T3, T1), (T3, T1, T2)]
        return max(
            float(np.linalg.norm(a @ b - b @ a - 1j * c)) for a, b, c in pairs
        )

    def casimir_residual(self) -> float:
        T = self.spin
        total = self.T1 @ self.T1 + self.T2 @ self.T2 + self.T3 @ self.T3
        return float(np.linalg.norm(total - T * (T + 1) * self.identity()))


def make_generators(T) -> SU2Frame:
    """Angular-momentum matrices in the T3 eigenbasis, ascending order.

    T+ = T1 + iT2 raises m -> m+1 with the real positive element
    sqrt(T(T+1) - m(m+1)).
    """
    label = SpinLabel.of(T)
    m = label.weights()
    spin = label.value

    # raising operator: column m, row m+1 (one below the diagonal)
    ladder = np.sqrt(spin * (spin + 1) - m[:-1] * (m[:-1] + 1))
    raising = np.diag(ladder, k=-1).astype(complex)
    lowering = raising.conj().T

    T1 = (raising + lowering) / 2
    T2 = (raising - lowering) / 2j
    T3 = np.diag(m).astype(complex)
    logger.debug("Built SU(2) frame for T=%s (dim %d)", label, label.dim)
    return SU2Frame(label=label, T1=T1, T2=T2, T3=T3)
