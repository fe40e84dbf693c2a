"""Exception hierarchy shared by every package.

Each error carries a short machine-readable ``code`` that the CLI reports in
its JSON error line.
"""


class BeamsError(ValueError):
    code = "error"

    def __init__(self, message: str, path: str = None):
        super().__init__(message)
        self.path = path

    def to_dict(self) -> dict:
        record = {"error": self.code, "message": str(self)}
        if self.path:
            record["path"] = str(self.path)
        return record


class NotHermitian(BeamsError):
    code = "not_hermitian"


class DimensionMismatch(BeamsError):
    code = "dimension_mismatch"


class NotPositive(BeamsError):
    code = "not_positive"


class OutOfRange(BeamsError):
    code = "out_of_range"


class Unbounded(BeamsError):
    code = "unbounded"


class ZeroIntensity(BeamsError):
    code = "zero_intensity"


class LengthMismatch(BeamsError):
    code = "length_mismatch"


class ZeroWeight(BeamsError):
    code = "zero_weight"


class Singularity(BeamsError):
    code = "singularity"


class EmptyBatch(BeamsError):
    code = "empty_batch"


class DatasetError(BeamsError):
    code = "dataset_error"


class ConfigError(BeamsError):
    code = "config_error"
