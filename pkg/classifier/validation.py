"""Dataset validation before training or evaluation."""

import logging
from dataclasses import dataclass, field
from pathlib import Path

import pandas as pd

from su2.errors import DatasetError

logger = logging.getLogger(__name__)

LABEL_COLUMN = "label"


@dataclass
class ValidationResult:
    passed: bool = True
    total_records: int = 0
    format_errors: list[str] = field(default_factory=list)
    quality_warnings: list[str] = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    def summary(self) -> str:
        status = "PASSED" if self.passed else "FAILED"
        parts = [f"Validation {status}: {self.total_records} rows"]
        if self.format_errors:
            parts.append(f"  Format errors: {len(self.format_errors)}")
        if self.quality_warnings:
            parts.append(f"  Quality warnings: {len(self.quality_warnings)}")
        return "\n".join(parts)


class DatasetValidator:
    """Checks a f1..fd,label table row by row.

    Row numbers in messages are 1-based data rows (the header is row 0).
    """

    def __init__(self, n_classes: int = None, min_records: int = 1):
        self.n_classes = n_classes
        self.min_records = min_records

    def validate_frame(self, frame: pd.DataFrame) -> ValidationResult:
        result = ValidationResult(total_records=len(frame))

        feature_columns = self._validate_header(frame, result)
        if result.format_errors:
            result.passed = False
            return result

        labels = self._validate_rows(frame, feature_columns, result)
        self._validate_classes(labels, result)

        result.stats["d"] = len(feature_columns)
        result.passed = len(result.format_errors) == 0
        return result

    def _validate_header(self, frame: pd.DataFrame, result: ValidationResult) -> list[str]:
        columns = list(frame.columns)
        if not columns or columns[-1] != LABEL_COLUMN:
            result.format_errors.append(f"Header: last column must be '{LABEL_COLUMN}', got {columns}")
            return []
        features = columns[:-1]
        expected = [f"f{i + 1}" for i in range(len(features))]
        if not features:
            result.format_errors.append("Header: no feature columns")
        elif features != expected:
            result.format_errors.append(f"Header: feature columns must be {expected}, got {features}")
        if len(frame) < self.min_records:
            result.format_errors.append(f"Too few rows: {len(frame)} < minimum {self.min_records}")
        return features

    def _validate_rows(self, frame: pd.DataFrame, feature_columns: list[str], result: ValidationResult) -> list[int]:
        labels = []
        for i, row in enumerate(frame.itertuples(index=False), start=1):
            values = list(row)
            for column, raw in zip(feature_columns, values[:-1]):
                try:
                    value = float(raw)
                except (TypeError, ValueError):
                    result.format_errors.append(f"Row {i}: {column} is not a number: '{raw}'")
                    continue
                if value != value or value in (float("inf"), float("-inf")):
                    result.format_errors.append(f"Row {i}: {column} is not finite")

            raw_label = str(values[-1]).strip()
            try:
                label = int(raw_label)
            except ValueError:
                result.format_errors.append(f"Row {i}: label is not an integer: '{raw_label}'")
                continue
            if label < 0:
                result.format_errors.append(f"Row {i}: label {label} is negative")
                continue
            if self.n_classes is not None and label >= self.n_classes:
                result.format_errors.append(f"Row {i}: label {label} >= N={self.n_classes}")
                continue
            labels.append(label)
        return labels

    def _validate_classes(self, labels: list[int], result: ValidationResult):
        if not labels:
            return
        distinct = sorted(set(labels))
        n_classes = self.n_classes or len(distinct)
        result.stats["n_classes"] = n_classes
        result.stats["class_counts"] = {c: labels.count(c) for c in distinct}

        # the encoding needs Hilbert dimension equal to the number of classes
        if self.n_classes is None and distinct != list(range(len(distinct))):
            result.format_errors.append(
                f"Labels must be 0..N-1 with every class present, got {distinct}"
            )
        elif self.n_classes is not None and len(distinct) != self.n_classes:
            result.format_errors.append(
                f"Dataset has {len(distinct)} classes but N={self.n_classes}"
            )
        if n_classes < 2:
            result.format_errors.append("Need at least two classes")

        smallest = min(result.stats["class_counts"].values())
        if smallest * n_classes * 4 < len(labels):
            result.quality_warnings.append(f"Class imbalance: smallest class has {smallest} of {len(labels)} rows")


def read_table(path) -> pd.DataFrame:
    """Read a CSV as strings so every cell reaches the row checks verbatim."""
    path = Path(path)
    try:
        return pd.read_csv(path, dtype=str, keep_default_na=False)
    except pd.errors.EmptyDataError as e:
        raise DatasetError(f"{path} is empty", path=str(path)) from e
    except pd.errors.ParserError as e:
        raise DatasetError(f"cannot parse {path}: {e}", path=str(path)) from e


def validate_csv(path, n_classes: int = None) -> tuple[pd.DataFrame, ValidationResult]:
    frame = read_table(path)
    result = DatasetValidator(n_classes=n_classes).validate_frame(frame)
    logger.debug("%s: %s", path, result.summary())
    return frame, result


def failure_message(result: ValidationResult, limit: int = 5) -> str:
    shown = "; ".join(result.format_errors[:limit])
    more = len(result.format_errors) - limit
    if more > 0:
        shown += f"; ... and {more} more"
    return shown
