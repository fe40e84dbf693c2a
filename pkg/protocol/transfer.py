"""Transfer of a path-encoded Bloch vector to the OAM degree of freedom.

Factor order is A (path, 2) ⊗ B (polarisation, 2) ⊗ C (OAM, 2T+1), with
|H) ↦ |0) and |V) ↦ |1) on B.
"""

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from beams.mode_matrix import BlochVector, ModeMatrix, qubit_matrix
from beams.states import equivalent_observable, werner_lower_bound, werner_state
from su2.coherent import UnitVector3, wigner_rotation
from su2.errors import DimensionMismatch, OutOfRange, Singularity, ZeroWeight
from su2.spin import SpinLabel, make_generators

logger = logging.getLogger(__name__)

_S = 1 / math.sqrt(2)

# |0)_A|H), |0)_A|V), |1)_A|H), |1)_A|V)
BELL_VECTORS = {
    1: np.array([0, _S, -_S, 0], dtype=complex),  # (|0)|V) - |1)|H))/√2
    2: np.array([_S, 0, 0, -_S], dtype=complex),  # (|0)|H) - |1)|V))/√2
    3: np.array([_S, 0, 0, _S], dtype=complex),   # (|0)|H) + |1)|V))/√2
    4: np.array([0, _S, _S, 0], dtype=complex),   # (|0)|V) + |1)|H))/√2
}

# rotation axis of the correction applied after each outcome; None is no correction
CORRECTION_AXES = {1: None, 2: 1, 3: 2, 4: 3}

# rounding slack on the retrieved length, divided by |α| at retrieval
RETRIEVAL_TOL = 1e-10


@dataclass(frozen=True)
class BellBeam:
    index: int

    def __post_init__(self):
        if self.index not in BELL_VECTORS:
            raise OutOfRange(f"Bell beam index must be 1..4, got {self.index}")

    @property
    def vector(self) -> np.ndarray:
        return BELL_VECTORS[self.index]

    def projector(self) -> np.ndarray:
        v = self.vector
        return np.outer(v, v.conj())

    @classmethod
    def all(cls) -> list["BellBeam"]:
        return [cls(k) for k in sorted(BELL_VECTORS)]


@dataclass(frozen=True, eq=False)
class TripartiteState:
    T: SpinLabel
    matrix: ModeMatrix

    def __post_init__(self):
        if self.matrix.dim != 4 * self.T.dim:
            raise DimensionMismatch(
                f"tripartite matrix dim {self.matrix.dim} is not 4·{self.T.dim}"
            )


@dataclass(frozen=True, eq=False)
class MeasurementOutcome:
    weight: float
    post_state: ModeMatrix


def build_channel(alpha: float, T) -> ModeMatrix:
    """The ½⊗T Werner channel on polarisation ⊗ OAM."""
    return werner_state(alpha, T)


def prepare_input(p, alpha: float, T) -> TripartiteState:
    """J^A(p) ⊗ J^{BC}(α)."""
    label = SpinLabel.of(T)
    joint = np.kron(qubit_matrix(p).entries, build_channel(alpha, label).entries)
    return TripartiteState(label, ModeMatrix(joint))


def bell_project(state: TripartiteState, beam: BellBeam) -> MeasurementOutcome:
    """Project A⊗B onto a Bell beam and trace it out."""
    dim_c = state.T.dim
    projected = np.kron(beam.projector(), np.eye(dim_c)) @ state.matrix.entries
    weight = float(np.trace(projected).real)
    if weight < 1e-14:
        raise ZeroWeight(f"Bell beam {beam.index} carries no intensity")

    # P·J·P has the same reduced matrix on C as P·J, by cyclicity of the A⊗B trace
    reduced = np.einsum("aiaj->ij", projected.reshape(4, dim_c, 4, dim_c))
    return MeasurementOutcome(weight, ModeMatrix(reduced / weight))


def correction(beam: BellBeam, T) -> np.ndarray:
    """R_k(π) = exp(+i T_k π) for beams 2, 3, 4; identity for beam 1."""
    frame = make_generators(T)
    axis = CORRECTION_AXES[beam.index]
    if axis is None:
        return frame.identity()
    return wigner_rotation(frame, UnitVector3.axis(axis), math.pi, sign=1)


def run_protocol(p, alpha: float, T, beam: BellBeam) -> ModeMatrix:
    """Corrected OAM matrix (1 + α T̂·p)/(2T+1) after measuring ``beam``."""
    state = prepare_input(p, alpha, T)
    outcome = bell_project(state, beam)
    corrected = outcome.post_state.conjugated(correction(beam, state.T))
    logger.debug("Beam %d at T=%s: weight %.6f", beam.index, state.T, outcome.weight)
    return corrected


def retrieve_bloch(J: ModeMatrix, alpha: float, T) -> BlochVector:
    """p_i = Tr[J · equivalent_observable(ê_i)] / α.

    A retrieved length at most RETRIEVAL_TOL/|α| above 1 is rescaled to 1.
    """
    if alpha == 0:
        raise Singularity("α = 0 leaves no information to retrieve")
    label = SpinLabel.of(T)
    if J.dim != label.dim:
        raise DimensionMismatch(f"matrix dim {J.dim} does not match T={label}")
    components = [
        J.expectation(equivalent_observable(UnitVector3.axis(i), label).operator) / alpha
        for i in (1, 2, 3)
    ]
    return BlochVector.clipped(components, RETRIEVAL_TOL / abs(alpha))


@dataclass
class TransferRecord:
    p_in: list
    alpha: float
    T: str
    beam: int
    weight: float
    p_out: list = None
    roundtrip_error: float = None
    error: str = None


def transfer(p, alpha: float, T, beam: BellBeam) -> TransferRecord:
    """One protocol run reported as a flat record, for the CLI."""
    label = SpinLabel.of(T)
    p = BlochVector.of(p)
    outcome = bell_project(prepare_input(p, alpha, label), beam)
    record = TransferRecord(
        p_in=p.as_array().tolist(),
        alpha=float(alpha),
        T=str(label),
        beam=beam.index,
        weight=outcome.weight,
    )
    corrected = outcome.post_state.conjugated(correction(beam, label))
    try:
        p_out = retrieve_bloch(corrected, alpha, label)
    except Singularity as e:
        record.error = e.code
        return record
    record.p_out = p_out.as_array().tolist()
    record.roundtrip_error = float(np.linalg.norm(p_out.as_array() - p.as_array()))
    return record
