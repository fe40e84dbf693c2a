"""Labelled feature datasets: CSV I/O, seeded splits and a toy two-blob generator."""

import logging
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import pandas as pd

from su2.errors import DatasetError, OutOfRange

from .validation import LABEL_COLUMN, failure_message, validate_csv

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Dataset:
    """Samples (x, label) with labels in [0, n_classes)."""

    X: np.ndarray = field(repr=False)
    y: np.ndarray = field(repr=False)
    n_classes: int = 0

    def __post_init__(self):
        X = np.atleast_2d(np.asarray(self.X, dtype=float))
        y = np.asarray(self.y, dtype=int).reshape(-1)
        if X.shape[0] != y.shape[0]:
            raise DatasetError(f"{X.shape[0]} feature rows but {y.shape[0]} labels")
        n_classes = self.n_classes or (len(np.unique(y)) if len(y) else 0)
        if len(y) and (y.min() < 0 or y.max() >= n_classes):
            raise DatasetError(f"labels must lie in [0, {n_classes}), got {y.min()}..{y.max()}")
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "n_classes", int(n_classes))

    def __len__(self) -> int:
        return self.y.shape[0]

    @property
    def d(self) -> int:
        return self.X.shape[1]

    def subset(self, indices) -> "Dataset":
        indices = np.asarray(indices, dtype=int)
        return Dataset(self.X[indices], self.y[indices], self.n_classes)

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame(self.X, columns=[f"f{i + 1}" for i in range(self.d)])
        frame[LABEL_COLUMN] = self.y
        return frame

    def save(self, path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        self.to_frame().to_csv(path, index=False)
        return path

    @classmethod
    def from_frame(cls, frame: pd.DataFrame, n_classes: int) -> "Dataset":
        """Build from a validated f1..fd,label frame."""
        features = frame.drop(columns=[LABEL_COLUMN]).astype(float).to_numpy()
        labels = frame[LABEL_COLUMN].astype(int).to_numpy()
        return cls(features, labels, n_classes)

    @classmethod
    def load(cls, path, n_classes: int = None) -> "Dataset":
        """Read a f1..fd,label CSV, validating every row before building the dataset."""
        frame, result = validate_csv(path, n_classes)
        if not result.passed:
            raise DatasetError(failure_message(result), path=str(path))
        dataset = cls.from_frame(frame, n_classes or result.stats["n_classes"])
        logger.info("Loaded %d samples (d=%d, N=%d) from %s", len(dataset), dataset.d, dataset.n_classes, path)
        return dataset


def split_dataset(dataset: Dataset, train_fraction: float = 0.8, seed: int = 0) -> tuple[Dataset, Dataset]:
    """Seeded permutation split into (train, test)."""
    if not 0 < train_fraction <= 1:
        raise OutOfRange(f"train fraction must be in (0, 1], got {train_fraction}")
    order = np.random.default_rng(seed).permutation(len(dataset))
    cut = int(round(train_fraction * len(dataset)))
    return dataset.subset(order[:cut]), dataset.subset(order[cut:])


def make_blobs(n: int = 200, seed: int = 7, separation: float = 2.0, spread: float = 0.5) -> Dataset:
    """Two Gaussian blobs in the plane, centred at ±(separation/2, separation/2)."""
    rng = np.random.default_rng(seed)
    half = n // 2
    centre = np.full(2, separation / 2)
    X = np.vstack([
        rng.normal(loc=-centre, scale=spread, size=(half, 2)),
        rng.normal(loc=centre, scale=spread, size=(n - half, 2)),
    ])
    y = np.concatenate([np.zeros(half, dtype=int), np.ones(n - half, dtype=int)])
    return Dataset(X, y, 2)
