"""Range values, bound statistics, and range-operator selectivity.

A range attribute is summarized by two scalar statistics objects (one over
the finite lower bounds, one over the finite upper bounds) plus fractions
for nulls, empty ranges and infinite bounds.  Each positional operator
reduces to a scalar inequality between one bound of each side, so the
scalar join estimator does the real work:

* X strictly left of Y   ->  X.upper < Y.lower
* X strictly right of Y  ->  X.lower > Y.upper
* X no-extend-right of Y ->  X.upper < Y.upper
* X no-extend-left of Y  ->  X.lower < Y.lower  (see range_join_selectivity)
* X overlaps Y           ->  complement of the two strict cases

Containment cannot be derived this way: it ties a range's own bounds
together, which the two independent bound histograms cannot express, so it
is rejected rather than guessed.

Empty ranges have no position, so they satisfy none of the operators, on
either side; their share is tracked and factored out, like nulls.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass

from ._util import clamp01
from .estimator import InsufficientStatisticsError, join_selectivity
from .operators import RangeOp, ScalarOp
from .stats import (
    AttributeStats,
    analyze_column,
    sample_rows,
    stats_from_dict,
    stats_to_dict,
    SAMPLE_ROWS_PER_TARGET,
    _require,
)


@dataclass(frozen=True)
class RangeValue:
    """An interval over a totally ordered domain.

    Bounds may be -inf/+inf (always treated as open).  A range where the
    bounds coincide is only non-empty when both sides are closed; other
    degenerate combinations normalize to the canonical empty range.
    """

    lower: float
    upper: float
    lower_closed: bool
    upper_closed: bool
    empty: bool = False

    def __post_init__(self):
        if self.empty:
            object.__setattr__(self, "lower", 0.0)
            object.__setattr__(self, "upper", 0.0)
            object.__setattr__(self, "lower_closed", False)
            object.__setattr__(self, "upper_closed", False)
            return
        lower, upper = float(self.lower), float(self.upper)
        if math.isnan(lower) or math.isnan(upper):
            raise ValueError("range bounds may not be NaN")
        if lower == math.inf or upper == -math.inf:
            raise ValueError("range bounds out of order")
        if lower > upper:
            raise ValueError("range bounds out of order")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        # infinite bounds never contain their endpoint
        if math.isinf(lower) and self.lower_closed:
            object.__setattr__(self, "lower_closed", False)
        if math.isinf(upper) and self.upper_closed:
            object.__setattr__(self, "upper_closed", False)
        if lower == upper and not (self.lower_closed and self.upper_closed):
            object.__setattr__(self, "empty", True)
            object.__setattr__(self, "lower", 0.0)
            object.__setattr__(self, "upper", 0.0)
            object.__setattr__(self, "lower_closed", False)
            object.__setattr__(self, "upper_closed", False)


EMPTY_RANGE = RangeValue(0.0, 0.0, False, False, empty=True)

_RANGE_RE = re.compile(r"^([\[\(])([^,]*),([^,]*)([\]\)])$")


def parse_range(text: str) -> RangeValue | None:
    """Parse a range literal; an empty string denotes null.

    Accepted forms: "empty", and "[a,b]" with any mix of [ ( ] ) brackets;
    bounds are decimal numbers or "-inf"/"inf".
    """
    text = text.strip()
    if not text:
        return None
    if text.lower() == "empty":
        return EMPTY_RANGE
    m = _RANGE_RE.match(text)
    if not m:
        raise ValueError(f"malformed range literal {text!r}")
    open_br, lo_s, hi_s, close_br = m.groups()
    try:
        lower = float(lo_s.strip())
        upper = float(hi_s.strip())
    except ValueError:
        raise ValueError(f"malformed range literal {text!r}") from None
    if math.isnan(lower) or math.isnan(upper):
        raise ValueError(f"malformed range literal {text!r}")
    try:
        return RangeValue(lower, upper, open_br == "[", close_br == "]")
    except ValueError as exc:
        raise ValueError(f"invalid range {text!r}: {exc}") from None


def _fmt_bound(v: float) -> str:
    if v == math.inf:
        return "inf"
    if v == -math.inf:
        return "-inf"
    return repr(v)


def format_range(r: RangeValue | None) -> str:
    if r is None:
        return ""
    if r.empty:
        return "empty"
    lb = "[" if r.lower_closed else "("
    rb = "]" if r.upper_closed else ")"
    return f"{lb}{_fmt_bound(r.lower)},{_fmt_bound(r.upper)}{rb}"


# ---------------------------------------------------------------------------
# Operator semantics over individual range pairs.  The exact-count oracle
# must agree with these definitions, so they live here as the single source
# of truth.  Empty operands never qualify.


def _ends_before_starts(x: RangeValue, y: RangeValue) -> bool:
    if x.upper != y.lower:
        return x.upper < y.lower
    return not (x.upper_closed and y.lower_closed)


def _ends_by(x: RangeValue, y: RangeValue) -> bool:
    # X's upper bound is at or before Y's: at equal values an open bound
    # ends earlier than a closed one.
    if x.upper != y.upper:
        return x.upper < y.upper
    return not (x.upper_closed and not y.upper_closed)


def _starts_at_or_after(x: RangeValue, y: RangeValue) -> bool:
    # at equal values a closed bound starts earlier than an open one
    if x.lower != y.lower:
        return x.lower > y.lower
    return not (x.lower_closed and not y.lower_closed)


def range_op_holds(op: RangeOp, x: RangeValue | None, y: RangeValue | None) -> bool:
    """Whether ``x <op> y`` holds; null and empty operands never qualify."""
    if x is None or y is None or x.empty or y.empty:
        return False
    if op is RangeOp.STRICTLY_LEFT:
        return _ends_before_starts(x, y)
    if op is RangeOp.STRICTLY_RIGHT:
        return _ends_before_starts(y, x)
    if op is RangeOp.NO_EXTEND_RIGHT:
        return _ends_by(x, y)
    if op is RangeOp.NO_EXTEND_LEFT:
        return _starts_at_or_after(x, y)
    if op is RangeOp.OVERLAPS:
        return not _ends_before_starts(x, y) and not _ends_before_starts(y, x)
    raise ValueError(f"unsupported operator {op}")


# ---------------------------------------------------------------------------
# Statistics over a range column.


@dataclass(frozen=True, eq=False)
class RangeStats:
    """Bound statistics plus null / empty / infinite-bound fractions.

    lower_stats and upper_stats summarize the finite bounds of the
    non-empty rows; empty_frac is relative to non-null rows, the infinite
    fractions to non-empty rows.
    """

    null_frac: float
    empty_frac: float
    lower_stats: AttributeStats | None
    upper_stats: AttributeStats | None
    lower_inf_frac: float
    upper_inf_frac: float

    def __eq__(self, other):
        if not isinstance(other, RangeStats):
            return NotImplemented
        return (
            self.null_frac == other.null_frac
            and self.empty_frac == other.empty_frac
            and self.lower_stats == other.lower_stats
            and self.upper_stats == other.upper_stats
            and self.lower_inf_frac == other.lower_inf_frac
            and self.upper_inf_frac == other.upper_inf_frac
        )


def analyze_range_column(
    values,
    statistics_target: int,
    sample_seed: int = 0,
    sample_cap: int | None = None,
) -> RangeStats:
    """Build RangeStats from a column of RangeValue and None entries."""
    if statistics_target < 1:
        raise ValueError("statistics target must be at least 1")
    if sample_cap is None:
        sample_cap = SAMPLE_ROWS_PER_TARGET * statistics_target
    rows = list(values)
    if not rows:
        raise ValueError("no data")

    idx = sample_rows(len(rows), sample_cap, sample_seed)
    sample = [rows[k] for k in idx]
    nonnull = [r for r in sample if r is not None]
    null_frac = (len(sample) - len(nonnull)) / len(sample)

    nonempty = [r for r in nonnull if not r.empty]
    empty_frac = (len(nonnull) - len(nonempty)) / len(nonnull) if nonnull else 0.0

    lowers = [r.lower for r in nonempty]
    uppers = [r.upper for r in nonempty]
    finite_lowers = [v for v in lowers if math.isfinite(v)]
    finite_uppers = [v for v in uppers if math.isfinite(v)]
    lower_inf_frac = (len(lowers) - len(finite_lowers)) / len(lowers) if nonempty else 0.0
    upper_inf_frac = (len(uppers) - len(finite_uppers)) / len(uppers) if nonempty else 0.0

    # the range rows were already sampled; analyze the bounds in full
    lower_stats = (
        analyze_column(finite_lowers, statistics_target, sample_seed, len(finite_lowers))
        if finite_lowers
        else None
    )
    upper_stats = (
        analyze_column(finite_uppers, statistics_target, sample_seed, len(finite_uppers))
        if finite_uppers
        else None
    )
    return RangeStats(
        float(null_frac),
        float(empty_frac),
        lower_stats,
        upper_stats,
        float(lower_inf_frac),
        float(upper_inf_frac),
    )


def _scalar_term(
    sx: AttributeStats | None, sy: AttributeStats | None, op: ScalarOp, weight: float
) -> float:
    """weight * scalar join estimate, demanding stats only when weight > 0."""
    if weight <= 0.0:
        return 0.0
    if sx is None or sy is None:
        raise InsufficientStatisticsError("insufficient statistics")
    return weight * join_selectivity(sx, sy, op)


def _conditional_selectivity(
    sx: RangeStats, sy: RangeStats, op: RangeOp, lower_ge: bool
) -> float:
    """P(X <op> Y) given both sides non-null and non-empty."""
    lx, ux = sx.lower_inf_frac, sx.upper_inf_frac
    ly, uy = sy.lower_inf_frac, sy.upper_inf_frac
    if op is RangeOp.STRICTLY_LEFT:
        # an infinite X.upper or Y.lower can never satisfy the inequality
        return _scalar_term(
            sx.upper_stats, sy.lower_stats, ScalarOp.LT, (1.0 - ux) * (1.0 - ly)
        )
    if op is RangeOp.STRICTLY_RIGHT:
        return _scalar_term(
            sx.lower_stats, sy.upper_stats, ScalarOp.GT, (1.0 - lx) * (1.0 - uy)
        )
    if op is RangeOp.NO_EXTEND_RIGHT:
        # a finite X.upper lies below an infinite Y.upper with certainty
        return (1.0 - ux) * uy + _scalar_term(
            sx.upper_stats, sy.upper_stats, ScalarOp.LT, (1.0 - ux) * (1.0 - uy)
        )
    if op is RangeOp.NO_EXTEND_LEFT:
        if lower_ge:
            return ly + _scalar_term(
                sx.lower_stats, sy.lower_stats, ScalarOp.GE, (1.0 - lx) * (1.0 - ly)
            )
        return lx * (1.0 - ly) + _scalar_term(
            sx.lower_stats, sy.lower_stats, ScalarOp.LT, (1.0 - lx) * (1.0 - ly)
        )
    if op is RangeOp.OVERLAPS:
        left = _conditional_selectivity(sx, sy, RangeOp.STRICTLY_LEFT, lower_ge)
        right = _conditional_selectivity(sx, sy, RangeOp.STRICTLY_RIGHT, lower_ge)
        return 1.0 - left - right
    raise ValueError(f"unsupported operator {op}")


def range_join_selectivity(
    sx: RangeStats,
    sy: RangeStats,
    op: RangeOp,
    *,
    no_extend_left_as_ge: bool = False,
) -> float:
    """Estimate the fraction of the Cartesian product with ``x <op> y``.

    The no-extend-left operator estimates P(X.lower < Y.lower) by default;
    with ``no_extend_left_as_ge`` it estimates P(X.lower >= Y.lower), the
    reading that matches the operator's pairwise semantics.
    """
    nn_x = (1.0 - sx.null_frac) * (1.0 - sx.empty_frac)
    nn_y = (1.0 - sy.null_frac) * (1.0 - sy.empty_frac)
    if nn_x <= 0.0 or nn_y <= 0.0:
        return 0.0
    cond = _conditional_selectivity(sx, sy, op, no_extend_left_as_ge)
    return clamp01(nn_x * nn_y * cond)


# ---------------------------------------------------------------------------
# Interchange format, mirroring the scalar stats documents.


def range_stats_to_dict(s: RangeStats) -> dict:
    return {
        "null_frac": s.null_frac,
        "empty_frac": s.empty_frac,
        "lower_inf_frac": s.lower_inf_frac,
        "upper_inf_frac": s.upper_inf_frac,
        "lower_stats": None if s.lower_stats is None else stats_to_dict(s.lower_stats),
        "upper_stats": None if s.upper_stats is None else stats_to_dict(s.upper_stats),
    }


def save_range_stats(s: RangeStats) -> bytes:
    return json.dumps(range_stats_to_dict(s)).encode("utf-8")


def range_stats_from_dict(doc: dict) -> RangeStats:
    if not isinstance(doc, dict):
        raise ValueError("stats document must be a JSON object")
    fracs = {}
    for fld in ("null_frac", "empty_frac", "lower_inf_frac", "upper_inf_frac"):
        v = _require(doc, fld)
        if not isinstance(v, (int, float)) or not 0 <= v <= 1:
            raise ValueError(f"{fld} out of range")
        fracs[fld] = float(v)
    lower_doc = _require(doc, "lower_stats")
    upper_doc = _require(doc, "upper_stats")
    lower = None if lower_doc is None else stats_from_dict(lower_doc)
    upper = None if upper_doc is None else stats_from_dict(upper_doc)
    return RangeStats(
        fracs["null_frac"],
        fracs["empty_frac"],
        lower,
        upper,
        fracs["lower_inf_frac"],
        fracs["upper_inf_frac"],
    )


def load_range_stats(data: bytes | str) -> RangeStats:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {exc}") from None
    return range_stats_from_dict(doc)
