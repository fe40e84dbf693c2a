"""Tests for dataset validation."""

import tempfile
from pathlib import Path

import pandas as pd
import pytest

from classifier.dataset import Dataset
from classifier.validation import DatasetValidator, ValidationResult, failure_message, validate_csv
from su2.errors import DatasetError


def make_frame(rows, columns=("f1", "f2", "label")):
    return pd.DataFrame([[str(v) for v in row] for row in rows], columns=list(columns))


VALID_ROWS = [[0.1, 0.2, 0], [1.5, -0.3, 1], [0.4, 0.9, 0], [-1.0, 2.0, 1]]


class TestValidateFrame:
    def test_valid_frame_passes(self):
        result = DatasetValidator().validate_frame(make_frame(VALID_ROWS))
        assert result.passed is True
        assert result.format_errors == []
        assert result.stats["n_classes"] == 2
        assert result.stats["d"] == 2

    def test_non_numeric_feature_has_row_number(self):
        rows = VALID_ROWS + [["abc", 0.5, 1]]
        result = DatasetValidator().validate_frame(make_frame(rows))
        assert result.passed is False
        assert any(err.startswith("Row 5: f1") for err in result.format_errors)

    def test_label_above_n(self):
        rows = VALID_ROWS + [[0.0, 0.0, 2]]
        result = DatasetValidator(n_classes=2).validate_frame(make_frame(rows))
        assert "Row 5: label 2 >= N=2" in result.format_errors

    def test_fractional_label(self):
        rows = VALID_ROWS + [[0.0, 0.0, 0.5]]
        result = DatasetValidator().validate_frame(make_frame(rows))
        assert any("Row 5: label is not an integer" in err for err in result.format_errors)

    def test_missing_class(self):
        rows = [[0.1, 0.2, 0], [0.3, 0.4, 2]]
        result = DatasetValidator().validate_frame(make_frame(rows))
        assert result.passed is False

    def test_fewer_classes_than_n(self):
        result = DatasetValidator(n_classes=3).validate_frame(make_frame(VALID_ROWS))
        assert any("N=3" in err for err in result.format_errors)

    def test_single_class(self):
        rows = [[0.1, 0.2, 0], [0.3, 0.4, 0]]
        result = DatasetValidator().validate_frame(make_frame(rows))
        assert "Need at least two classes" in result.format_errors

    def test_bad_header(self):
        frame = make_frame(VALID_ROWS, columns=("x", "y", "label"))
        result = DatasetValidator().validate_frame(frame)
        assert result.passed is False
        assert result.format_errors[0].startswith("Header")

    def test_label_must_be_last(self):
        frame = make_frame(VALID_ROWS, columns=("f1", "label", "f2"))
        result = DatasetValidator().validate_frame(frame)
        assert result.passed is False

    def test_imbalance_warning(self):
        rows = [[float(i), 0.0, 0] for i in range(20)] + [[0.0, 1.0, 1]]
        result = DatasetValidator().validate_frame(make_frame(rows))
        assert result.passed is True
        assert len(result.quality_warnings) == 1


class TestValidationResult:
    def test_summary(self):
        result = ValidationResult(passed=False, total_records=3, format_errors=["Row 1: x"])
        summary = result.summary()
        assert "FAILED" in summary
        assert "Format errors: 1" in summary

    def test_failure_message_truncates(self):
        result = ValidationResult(passed=False, format_errors=[f"Row {i}: bad" for i in range(1, 9)])
        message = failure_message(result)
        assert message.startswith("Row 1: bad; Row 2: bad")
        assert "Row 6" not in message
        assert message.endswith("... and 3 more")


class TestValidateCsv:
    def test_returns_frame_and_result(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / "ok.csv"
            path.write_text("f1,label\n0.1,0\n0.2,1\n0.3,1\n")
            frame, result = validate_csv(path)
        assert list(frame.columns) == ["f1", "label"]
        assert result.passed is True
        assert result.stats["class_counts"] == {0: 1, 1: 2}

    def test_reports_without_raising(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / "bad.csv"
            path.write_text("f1,label\nnan,0\n0.2,1\n")
            _, result = validate_csv(path)
        assert result.passed is False
        assert "Row 1: f1 is not finite" in result.format_errors


class TestLoadDataset:
    def test_malformed_csv_raises_with_rows(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / "bad.csv"
            path.write_text("f1,f2,label\n0.1,0.2,0\n0.3,oops,1\n0.5,0.6,1\n")
            with pytest.raises(DatasetError) as excinfo:
                Dataset.load(path)
        assert "Row 2: f2" in str(excinfo.value)
        assert excinfo.value.path == str(path)

    def test_empty_file(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / "empty.csv"
            path.write_text("")
            with pytest.raises(DatasetError):
                Dataset.load(path)

    def test_labels_checked_against_n(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / "three.csv"
            path.write_text("f1,label\n0.1,0\n0.2,1\n0.3,2\n")
            with pytest.raises(DatasetError):
                Dataset.load(path, n_classes=2)

    def test_constructor_rejects_out_of_range_labels(self):
        with pytest.raises(DatasetError):
            Dataset([[0.0], [1.0]], [0, 2], 2)
