"""Small internal helpers."""

from __future__ import annotations

import numpy as np


def as_float_column(values) -> np.ndarray:
    """Coerce a sequence of nullable scalars to a float64 array, nulls as NaN."""
    if isinstance(values, np.ndarray) and values.dtype.kind == "f":
        return values.astype(np.float64, copy=False)
    out = np.array([np.nan if v is None else float(v) for v in values], dtype=np.float64)
    return out


def clamp01(x: float) -> float:
    return 0.0 if x < 0.0 else 1.0 if x > 1.0 else float(x)
