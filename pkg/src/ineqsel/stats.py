"""Per-attribute statistics: sampling, null accounting, MCV and histogram build.

Every analyzed row lands in exactly one partition: null, most-common value,
or histogram.  The fractions of the three partitions drive the combined
selectivity estimates.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from ._util import as_float_column
from .histogram import EquiDepthHistogram, build_equi_depth
from .mcv import EMPTY_MCV, MostCommonValues, build_mcv

# Sample size grows with the requested resolution, as statistics collectors
# commonly do; pass an explicit cap >= N to analyze the full column.
SAMPLE_ROWS_PER_TARGET = 300


@dataclass(frozen=True, eq=False)
class AttributeStats:
    """Null fraction, MCV list and residual histogram for one column.

    MCV fractions are relative to the non-null rows; the null fraction
    applies multiplicatively on top.  The histogram covers the non-null
    rows that are not in the MCV list.
    """

    null_frac: float
    mcv: MostCommonValues
    histogram: EquiDepthHistogram | None
    row_count: int
    statistics_target: int

    @property
    def mcv_fraction(self) -> float:
        """Share of non-null rows covered by the MCV list (p_mcv)."""
        return self.mcv.total_fraction

    @property
    def hist_fraction(self) -> float:
        """Share of non-null rows covered by the histogram (p_hist)."""
        return 1.0 - self.mcv.total_fraction

    def __eq__(self, other):
        if not isinstance(other, AttributeStats):
            return NotImplemented
        return (
            self.null_frac == other.null_frac
            and self.mcv == other.mcv
            and self.histogram == other.histogram
            and self.row_count == other.row_count
            and self.statistics_target == other.statistics_target
        )


def sample_rows(n: int, cap: int, seed: int) -> np.ndarray:
    """Indices of a uniform sample without replacement; the full column if cap >= n."""
    if cap >= n:
        return np.arange(n)
    rng = np.random.default_rng(seed)
    return rng.choice(n, size=cap, replace=False)


def analyze_column(
    values,
    statistics_target: int,
    sample_seed: int = 0,
    sample_cap: int | None = None,
) -> AttributeStats:
    """Build AttributeStats from a column of nullable scalars (None or NaN = null).

    A seeded uniform sample of min(sample_cap, N) rows is analyzed.  MCV
    entries are capped at statistics_target; the residual histogram gets
    statistics_target bins, reduced when the residual has too few distinct
    values (one bin minimum), and is omitted when nothing is left for it.
    """
    if statistics_target < 1:
        raise ValueError("statistics target must be at least 1")
    if sample_cap is None:
        sample_cap = SAMPLE_ROWS_PER_TARGET * statistics_target
    data = as_float_column(values)
    if np.any(np.isinf(data)):
        raise ValueError("values must be finite")
    if data.size == 0:
        raise ValueError("no data")

    sample = data[sample_rows(data.size, sample_cap, sample_seed)]
    nulls = np.isnan(sample)
    null_frac = float(nulls.sum() / sample.size)
    nonnull = sample[~nulls]

    if nonnull.size == 0:
        return AttributeStats(null_frac, EMPTY_MCV, None, int(sample.size), statistics_target)

    mcv = build_mcv(nonnull, max_entries=statistics_target)
    residual = nonnull[~np.isin(nonnull, mcv.values)] if len(mcv) else nonnull

    histogram = None
    if residual.size:
        distinct = np.unique(residual).size
        bins = min(statistics_target, max(distinct - 1, 1))
        histogram = build_equi_depth(residual, bins)

    return AttributeStats(null_frac, mcv, histogram, int(sample.size), statistics_target)


# ---------------------------------------------------------------------------
# Interchange format: a JSON document, numbers at full (round-trip) precision.


def stats_to_dict(s: AttributeStats) -> dict:
    return {
        "null_frac": s.null_frac,
        "mcv": {
            "values": s.mcv.values.tolist(),
            "fractions": s.mcv.fractions.tolist(),
        },
        "histogram": None if s.histogram is None else {"bounds": s.histogram.bounds.tolist()},
        "row_count": s.row_count,
        "statistics_target": s.statistics_target,
    }


def save_stats(s: AttributeStats) -> bytes:
    return json.dumps(stats_to_dict(s)).encode("utf-8")


def _require(doc: dict, fld: str):
    if fld not in doc:
        raise ValueError(f"missing field {fld}")
    return doc[fld]


def stats_from_dict(doc: dict) -> AttributeStats:
    if not isinstance(doc, dict):
        raise ValueError("stats document must be a JSON object")
    null_frac = _require(doc, "null_frac")
    if not isinstance(null_frac, (int, float)) or not 0 <= null_frac <= 1:
        raise ValueError("null_frac out of range")
    mcv_doc = _require(doc, "mcv")
    mcv_values = _require(mcv_doc, "values")
    mcv_fractions = _require(mcv_doc, "fractions")
    if len(mcv_values) != len(mcv_fractions):
        raise ValueError("mcv values and fractions differ in length")
    try:
        mcv = MostCommonValues(np.array(mcv_values, dtype=np.float64),
                               np.array(mcv_fractions, dtype=np.float64))
    except ValueError as exc:
        raise ValueError(f"invalid mcv: {exc}") from None

    hist_doc = _require(doc, "histogram")
    histogram = None
    if hist_doc is not None:
        bounds = _require(hist_doc, "bounds")
        try:
            histogram = EquiDepthHistogram(np.array(bounds, dtype=np.float64))
        except ValueError as exc:
            raise ValueError(str(exc)) from None

    row_count = _require(doc, "row_count")
    if not isinstance(row_count, int) or row_count < 0:
        raise ValueError("row_count must be a non-negative integer")
    target = _require(doc, "statistics_target")
    if not isinstance(target, int) or target < 1:
        raise ValueError("statistics_target must be a positive integer")
    return AttributeStats(float(null_frac), mcv, histogram, row_count, target)


def load_stats(data: bytes | str) -> AttributeStats:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {exc}") from None
    return stats_from_dict(doc)
