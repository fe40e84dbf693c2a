"""Single-quNit gates: SU(N) generators, the generalised Hadamard, encoding and Euler unitaries."""

import itertools
import logging
from functools import lru_cache, reduce

import numpy as np

from beams.mode_matrix import PAULI
from su2.errors import LengthMismatch, OutOfRange
from su2.linalg import herm_exp

logger = logging.getLogger(__name__)


def _require_dimension(N: int) -> int:
    if int(N) != N or N < 2:
        raise OutOfRange(f"quNit dimension must be an integer >= 2, got {N}")
    return int(N)


@lru_cache(maxsize=None)
def _gell_mann(N: int) -> tuple:
    basis = []
    for j, k in itertools.combinations(range(N), 2):
        sym = np.zeros((N, N), dtype=complex)
        sym[j, k] = sym[k, j] = 1
        anti = np.zeros((N, N), dtype=complex)
        anti[j, k], anti[k, j] = -1j, 1j
        basis.extend([sym, anti])
    for l in range(1, N):
        diag = np.zeros(N)
        diag[:l] = 1
        diag[l] = -l
        basis.append(np.diag(np.sqrt(2 / (l * (l + 1))) * diag).astype(complex))
    for m in basis:
        m.setflags(write=False)
    return tuple(basis)


def gell_mann_basis(N: int) -> list[np.ndarray]:
    """Generalised Gell-Mann matrices, Tr(λ_a λ_b) = 2δ_ab.

    Ordered pair by pair (symmetric then antisymmetric for j<k), then the
    N-1 diagonal ones; N=2 gives σ1, σ2, σ3.
    """
    return list(_gell_mann(_require_dimension(N)))


def hadamard_general(N: int) -> np.ndarray:
    """N-point discrete Fourier unitary, entries ω^{jk}/√N."""
    N = _require_dimension(N)
    j, k = np.meshgrid(np.arange(N), np.arange(N), indexing="ij")
    return np.exp(2j * np.pi * j * k / N) / np.sqrt(N)


def spin_diagonal(N: int) -> np.ndarray:
    """Diagonal of S̄3 = diag(-(N-1)/2, ..., (N-1)/2)."""
    return np.arange(N) - (N - 1) / 2


def encode_angles(z, N: int) -> np.ndarray:
    """Encoded states for a batch of projections z = w·x, shape (len(z), N)."""
    N = _require_dimension(N)
    z = np.atleast_1d(np.asarray(z, dtype=float))
    uniform = hadamard_general(N)[:, 0]
    return np.exp(1j * np.outer(z, spin_diagonal(N))) * uniform


def encode(x, w, N: int) -> np.ndarray:
    """e^{i S̄3 (w·x)} H^{(N)} |0>."""
    x = np.asarray(x, dtype=float)
    w = np.asarray(w, dtype=float)
    if x.shape != w.shape or x.ndim != 1:
        raise LengthMismatch(f"features {x.shape} and weights {w.shape} differ")
    return encode_angles(float(w @ x), N)[0]


def build_unitary(angles, N: int) -> np.ndarray:
    """e^{iλ_1 α_1} e^{iλ_2 α_2} ... e^{iλ_{N²-1} α_{N²-1}}."""
    generators = gell_mann_basis(N)
    angles = np.asarray(angles, dtype=float)
    if angles.shape != (len(generators),):
        raise LengthMismatch(f"expected {len(generators)} angles, got {angles.size}")
    U = np.eye(N, dtype=complex)
    for generator, alpha in zip(generators, angles):
        if alpha != 0:
            U = U @ herm_exp(generator, alpha)
    return U


def map_multiqubit_index(bits) -> int:
    """|i_{n-1} ... i_1 i_0> ↦ |Σ i_k 2^k>, most significant bit first."""
    bits = list(bits)
    if not bits:
        raise LengthMismatch("bit list must not be empty")
    value = 0
    for bit in bits:
        if bit not in (0, 1):
            raise OutOfRange(f"bits must be 0 or 1, got {bit}")
        value = 2 * value + int(bit)
    return value


def multiqubit_operator(factors) -> np.ndarray:
    """Kronecker product of single-qubit operators, in the map_multiqubit_index basis."""
    factors = [np.asarray(f, dtype=complex) for f in factors]
    if not factors:
        raise LengthMismatch("need at least one factor")
    return reduce(np.kron, factors)


def two_qubit_operator_basis() -> list[np.ndarray]:
    """{1, σ_α⊗1, 1⊗σ_β, σ_α⊗σ_β} as sixteen 4×4 matrices."""
    single = [np.eye(2, dtype=complex), *PAULI]
    return [multiqubit_operator([a, b]) for a in single for b in single]
