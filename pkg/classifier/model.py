"""Variational quNit classifier: model parameters, prediction, loss and gradient descent."""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from tqdm import tqdm

from su2.errors import DimensionMismatch, EmptyBatch, LengthMismatch, OutOfRange

from .dataset import Dataset
from .qudit import build_unitary, encode_angles

logger = logging.getLogger(__name__)

PROB_FLOOR = 1e-12


@dataclass(frozen=True, eq=False)
class ClassifierModel:
    N: int
    d: int
    w: np.ndarray = field(repr=False)
    angles: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.N < 2:
            raise OutOfRange(f"need N >= 2 classes, got {self.N}")
        w = np.asarray(self.w, dtype=float)
        angles = np.asarray(self.angles, dtype=float)
        if w.shape != (self.d,):
            raise LengthMismatch(f"expected {self.d} encoder weights, got {w.size}")
        if angles.shape != (self.N**2 - 1,):
            raise LengthMismatch(f"expected {self.N**2 - 1} angles, got {angles.size}")
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "angles", angles)

    @property
    def parameter_count(self) -> int:
        return self.d + self.N**2 - 1

    def parameters(self) -> np.ndarray:
        return np.concatenate([self.w, self.angles])

    def with_parameters(self, theta) -> "ClassifierModel":
        theta = np.asarray(theta, dtype=float)
        if theta.shape != (self.parameter_count,):
            raise LengthMismatch(f"expected {self.parameter_count} parameters, got {theta.size}")
        return ClassifierModel(self.N, self.d, theta[: self.d], theta[self.d:])

    @classmethod
    def identity(cls, N: int, d: int) -> "ClassifierModel":
        return cls(N, d, np.zeros(d), np.zeros(N**2 - 1))

    @classmethod
    def initialise(cls, N: int, d: int, seed: int = 0) -> "ClassifierModel":
        """Small encoder weights and uniform Euler angles, reproducible from ``seed``."""
        rng = np.random.default_rng(seed)
        w = rng.normal(scale=0.1, size=d)
        angles = rng.uniform(0, 2 * np.pi, size=N**2 - 1)
        return cls(N, d, w, angles)

    def to_dict(self) -> dict:
        return {"N": self.N, "d": self.d, "w": self.w.tolist(), "angles": self.angles.tolist()}

    @classmethod
    def from_dict(cls, data: dict) -> "ClassifierModel":
        return cls(int(data["N"]), int(data["d"]), data["w"], data["angles"])

    def save(self, path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w") as f:
            json.dump(self.to_dict(), f, indent=2)
        return path

    @classmethod
    def load(cls, path) -> "ClassifierModel":
        with open(path) as f:
            return cls.from_dict(json.load(f))


@dataclass(frozen=True, eq=False)
class Prediction:
    probabilities: np.ndarray = field(repr=False)
    label: int

    @classmethod
    def from_probabilities(cls, probabilities) -> "Prediction":
        probabilities = np.asarray(probabilities, dtype=float)
        # np.argmax returns the first maximum, so ties go to the lowest index
        return cls(probabilities, int(np.argmax(probabilities)))


def _check_features(model: ClassifierModel, X: np.ndarray) -> np.ndarray:
    X = np.atleast_2d(np.asarray(X, dtype=float))
    if X.shape[1] != model.d:
        raise DimensionMismatch(f"model expects {model.d} features, got {X.shape[1]}")
    return X


def probabilities(model: ClassifierModel, X) -> np.ndarray:
    """Outcome probabilities |<a|U|ψ(x)>|² for each row of X, shape (n, N)."""
    X = _check_features(model, X)
    states = encode_angles(X @ model.w, model.N)
    U = build_unitary(model.angles, model.N)
    amplitudes = states @ U.T
    probs = np.abs(amplitudes) ** 2
    return probs / probs.sum(axis=1, keepdims=True)


def predict(model: ClassifierModel, x) -> Prediction:
    x = np.asarray(x, dtype=float)
    if x.ndim != 1:
        raise DimensionMismatch("predict takes a single feature vector")
    return Prediction.from_probabilities(probabilities(model, x)[0])


def loss(model: ClassifierModel, batch: Dataset) -> float:
    """Mean negative log-likelihood of the true labels."""
    if len(batch) == 0:
        raise EmptyBatch("loss needs at least one sample")
    probs = probabilities(model, batch.X)
    picked = probs[np.arange(len(batch)), batch.y]
    return float(-np.mean(np.log(np.maximum(picked, PROB_FLOOR))))


def grad_fd(model: ClassifierModel, batch: Dataset, step: float = 1e-5, scheme: str = "central") -> np.ndarray:
    """Finite-difference gradient over (w, angles); ``scheme`` is "central" or "forward"."""
    if len(batch) == 0:
        raise EmptyBatch("gradient needs at least one sample")
    if scheme not in ("central", "forward"):
        raise OutOfRange(f"unknown difference scheme {scheme!r}")
    theta = model.parameters()
    base = loss(model, batch) if scheme == "forward" else None
    grad = np.zeros_like(theta)
    for i in range(theta.size):
        shift = np.zeros_like(theta)
        shift[i] = step
        upper = loss(model.with_parameters(theta + shift), batch)
        if scheme == "central":
            lower = loss(model.with_parameters(theta - shift), batch)
            grad[i] = (upper - lower) / (2 * step)
        else:
            grad[i] = (upper - base) / step
    return grad


def accuracy(model: ClassifierModel, dataset: Dataset) -> float:
    if len(dataset) == 0:
        raise EmptyBatch("accuracy needs at least one sample")
    predicted = np.argmax(probabilities(model, dataset.X), axis=1)
    return float(np.mean(predicted == dataset.y))


@dataclass
class TrainConfig:
    learning_rate: float = 0.1
    epochs: int = 500
    fd_step: float = 1e-5
    seed: int = 0
    progress: bool = False

    def __post_init__(self):
        if self.learning_rate < 0:
            raise OutOfRange(f"learning rate must be >= 0, got {self.learning_rate}")
        if self.epochs < 0:
            raise OutOfRange(f"epochs must be >= 0, got {self.epochs}")
        if self.fd_step <= 0:
            raise OutOfRange(f"finite-difference step must be > 0, got {self.fd_step}")


@dataclass
class LossTrace:
    epochs: list[int] = field(default_factory=list)
    losses: list[float] = field(default_factory=list)
    accuracies: list[float] = field(default_factory=list)

    def append(self, epoch: int, value: float, acc: float):
        self.epochs.append(epoch)
        self.losses.append(value)
        self.accuracies.append(acc)

    def rows(self) -> list[dict]:
        return [
            {"epoch": e, "loss": l, "accuracy": a}
            for e, l, a in zip(self.epochs, self.losses, self.accuracies)
        ]


def train(model: ClassifierModel, dataset: Dataset, config: TrainConfig = None) -> tuple[ClassifierModel, LossTrace]:
    """Full-batch gradient descent; the trace holds the loss before each update and after the last."""
    config = config or TrainConfig()
    if dataset.n_classes != model.N:
        raise DimensionMismatch(
            f"dataset has {dataset.n_classes} classes but the model has N={model.N}"
        )
    if len(dataset) == 0:
        raise EmptyBatch("cannot train on an empty dataset")

    trace = LossTrace()
    epochs = tqdm(range(config.epochs), desc="train", disable=not config.progress)
    for epoch in epochs:
        trace.append(epoch, loss(model, dataset), accuracy(model, dataset))
        grad = grad_fd(model, dataset, config.fd_step)
        model = model.with_parameters(model.parameters() - config.learning_rate * grad)
    trace.append(config.epochs, loss(model, dataset), accuracy(model, dataset))

    logger.info(
        "Trained %d epochs: loss %.4f -> %.4f, accuracy %.3f",
        config.epochs, trace.losses[0], trace.losses[-1], trace.accuracies[-1],
    )
    return model, trace


def evaluate(model: ClassifierModel, dataset: Dataset) -> dict:
    """Accuracy and confusion matrix (rows true label, columns predicted)."""
    if len(dataset) == 0:
        raise EmptyBatch("cannot evaluate on an empty dataset")
    _check_features(model, dataset.X)
    predicted = np.argmax(probabilities(model, dataset.X), axis=1)
    confusion = np.zeros((model.N, model.N), dtype=int)
    np.add.at(confusion, (dataset.y, predicted), 1)
    return {
        "accuracy": float(np.mean(predicted == dataset.y)),
        "confusion": confusion.tolist(),
    }
