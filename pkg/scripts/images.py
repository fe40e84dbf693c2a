"""16-bit binary PGM images with a JSON sidecar recording the linear scaling."""

import json
import logging
from pathlib import Path

import numpy as np
import xxhash

from optics.modes import IntensityImage
from su2.errors import BeamsError

logger = logging.getLogger(__name__)

MAXVAL = 65535


def to_counts(values: np.ndarray) -> tuple[np.ndarray, float, float]:
    """Linear map min -> 0, max -> 65535; a constant image maps to zeros."""
    lo, hi = float(np.min(values)), float(np.max(values))
    if hi > lo:
        counts = np.rint((values - lo) / (hi - lo) * MAXVAL)
    else:
        counts = np.zeros_like(values)
    return counts.astype(">u2"), lo, hi


def encode_pgm(values: np.ndarray) -> tuple[bytes, float, float]:
    counts, lo, hi = to_counts(np.asarray(values, dtype=float))
    # row 0 is the top of the image, so flip to put +y up
    counts = counts[::-1]
    height, width = counts.shape
    header = f"P5\n{width} {height}\n{MAXVAL}\n".encode("ascii")
    return header + counts.tobytes(), lo, hi


def write_image(path, image: IntensityImage, **extra) -> dict:
    """Write ``path`` (.pgm) and ``path`` with a .json suffix; return the sidecar."""
    path = Path(path)
    data, lo, hi = encode_pgm(image.values)
    sidecar = {
        "min": lo,
        "max": hi,
        "grid": image.spec.to_dict(),
        "xxh64": xxhash.xxh64(data).hexdigest(),
        **extra,
    }
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(data)
        with open(path.with_suffix(".json"), "w") as f:
            json.dump(sidecar, f, indent=2, sort_keys=True)
    except OSError as e:
        raise BeamsError(f"cannot write image: {e.strerror}", path=str(path)) from e
    logger.info("Wrote %s (min %.4g, max %.4g)", path, lo, hi)
    return sidecar


def read_pgm(path) -> np.ndarray:
    """Counts of a P5 16-bit image, row 0 at the top."""
    data = Path(path).read_bytes()
    parts = data.split(b"\n", 3)
    if len(parts) < 4 or parts[0] != b"P5" or parts[2] != str(MAXVAL).encode():
        raise BeamsError("not a 16-bit P5 image", path=str(path))
    width, height = (int(v) for v in parts[1].split())
    return np.frombuffer(parts[3], dtype=">u2").reshape(height, width)
