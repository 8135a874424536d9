"""Experiment harness: dataset generation, column files, and the
error-versus-resolution sweep.

Column files hold one value per line; an empty line is a null.  Scalar
files contain decimal numbers, range files the range literal format.  The
sweep rebuilds statistics at each requested target, estimates the join
selectivity, and compares against the exact oracle (computed once), so the
resulting CSV traces how estimation error shrinks as histograms grow.
"""

from __future__ import annotations

import csv
import io
import math
import time
from dataclasses import dataclass

import numpy as np

from .estimator import join_selectivity
from .operators import RangeOp, ScalarOp
from .oracle import ExactCount, exact_join, exact_range_join
from .ranges import (
    RangeValue,
    analyze_range_column,
    format_range,
    parse_range,
    range_join_selectivity,
)
from .stats import analyze_column

SCALAR_KINDS = ("uniform-int", "skewed-int", "running-example-r1", "running-example-r2")
RANGE_KINDS = ("ranges-mixed",)
DATASET_KINDS = SCALAR_KINDS + RANGE_KINDS

RUNNING_EXAMPLE_R1 = (10, 11, 12, 20, 21, 22, 24, 25, 30, 35, 38, 45)
RUNNING_EXAMPLE_R2 = (15, 16, 17, 20, 30, 35, 38, 39, 40, 42, 45, 50)

DOMAIN_MAX = 10**6


def generate_scalar_column(kind: str, rows: int, seed: int) -> np.ndarray:
    """Deterministic scalar column for the given kind and seed."""
    if kind == "running-example-r1":
        return np.array(RUNNING_EXAMPLE_R1, dtype=np.float64)
    if kind == "running-example-r2":
        return np.array(RUNNING_EXAMPLE_R2, dtype=np.float64)
    if rows < 1:
        raise ValueError("rows must be at least 1")
    rng = np.random.default_rng(seed)
    if kind == "uniform-int":
        return rng.integers(0, DOMAIN_MAX + 1, size=rows).astype(np.float64)
    if kind == "skewed-int":
        # half the rows concentrate on ten hot values so MCV statistics
        # carry real weight; the rest spread uniformly
        hot = rng.integers(0, DOMAIN_MAX + 1, size=10).astype(np.float64)
        weights = 1.0 / np.arange(1, 11)
        weights /= weights.sum()
        use_hot = rng.random(rows) < 0.5
        values = rng.integers(0, DOMAIN_MAX + 1, size=rows).astype(np.float64)
        values[use_hot] = rng.choice(hot, size=int(use_hot.sum()), p=weights)
        return values
    raise ValueError(f"unknown scalar dataset kind {kind!r}")


def generate_range_column(
    rows: int,
    seed: int,
    *,
    empty_frac: float = 0.01,
    null_frac: float = 0.01,
    inf_frac: float = 0.01,
) -> list[RangeValue | None]:
    """Deterministic mixed range column: short/medium/long widths in a
    60/30/10 ratio over [0, 10^6], plus empty, null and infinite-bound rows."""
    if rows < 1:
        raise ValueError("rows must be at least 1")
    rng = np.random.default_rng(seed)
    out: list[RangeValue | None] = []
    for _ in range(rows):
        u = rng.random()
        if u < null_frac:
            out.append(None)
            continue
        if u < null_frac + empty_frac:
            out.append(RangeValue(0.0, 0.0, False, False, empty=True))
            continue
        w = rng.random()
        if w < 0.6:
            width = rng.uniform(1.0, 100.0)
        elif w < 0.9:
            width = rng.uniform(100.0, 10_000.0)
        else:
            width = rng.uniform(10_000.0, 200_000.0)
        start = rng.uniform(0.0, DOMAIN_MAX - width)
        lower = float(math.floor(start))
        upper = float(math.floor(start + width)) + 1.0
        lower_closed = bool(rng.random() < 0.5)
        upper_closed = bool(rng.random() < 0.5)
        if rng.random() < inf_frac:
            if rng.random() < 0.5:
                lower = -math.inf
            else:
                upper = math.inf
        out.append(RangeValue(lower, upper, lower_closed, upper_closed))
    return out


# ---------------------------------------------------------------------------
# Column files.


def format_scalar(v: float) -> str:
    if math.isnan(v):
        return ""
    if float(v).is_integer():
        return str(int(v))
    return repr(float(v))


def write_scalar_column(path, values) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for v in values:
            fh.write(format_scalar(float(v)) + "\n")


def read_scalar_column(path) -> np.ndarray:
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text:
                out.append(np.nan)
                continue
            try:
                v = float(text)
            except ValueError:
                raise ValueError(f"{path}:{lineno}: not a number: {text!r}") from None
            if math.isnan(v):
                raise ValueError(f"{path}:{lineno}: not a number: {text!r}")
            out.append(v)
    if not out:
        raise ValueError(f"{path}: empty column file")
    return np.array(out, dtype=np.float64)


def write_range_column(path, values) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for r in values:
            fh.write(format_range(r) + "\n")


def read_range_column(path) -> list[RangeValue | None]:
    out: list[RangeValue | None] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            try:
                out.append(parse_range(line))
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from None
    if not out:
        raise ValueError(f"{path}: empty column file")
    return out


def looks_like_range_file(path) -> bool:
    """Sniff a column file: range literals start with a bracket or 'empty'."""
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            text = line.strip()
            if not text:
                continue
            return text[0] in "[(" or text.lower() == "empty"
    return False


# ---------------------------------------------------------------------------
# The sweep.


@dataclass(frozen=True)
class ExperimentRow:
    statistics_target: int
    estimate: float
    exact: float
    error: float                 # |estimate - exact|, both fractions of the product
    est_time_us: float
    build_time_us: float


CSV_HEADER = ["statistics_target", "estimate", "exact", "error", "est_time_us", "build_time_us"]

# a single estimation call sits near timer resolution, so take the best of
# a few repeats to keep the timing column meaningful
_TIMING_REPEATS = 5


def _timed(fn):
    best = math.inf
    result = None
    for _ in range(_TIMING_REPEATS):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return result, best * 1e6


def run_sweep(
    file_x,
    file_y,
    op: ScalarOp | RangeOp,
    targets,
    seed: int = 0,
) -> list[ExperimentRow]:
    """Estimate-vs-oracle comparison for every statistics target.

    Statistics are built from the full columns (no sampling) so the error
    column isolates estimator error from sampling noise.
    """
    targets = sorted(set(int(t) for t in targets))
    if not targets:
        raise ValueError("no statistics targets given")

    if isinstance(op, RangeOp):
        xs = read_range_column(file_x)
        ys = read_range_column(file_y)
        exact = exact_range_join(xs, ys, op)

        def build(target):
            sx = analyze_range_column(xs, target, seed, len(xs))
            sy = analyze_range_column(ys, target, seed, len(ys))
            return sx, sy

        def estimate(sx, sy):
            return range_join_selectivity(sx, sy, op)

    else:
        xs = read_scalar_column(file_x)
        ys = read_scalar_column(file_y)
        exact = exact_join(xs, ys, op)

        def build(target):
            sx = analyze_column(xs, target, seed, len(xs))
            sy = analyze_column(ys, target, seed, len(ys))
            return sx, sy

        def estimate(sx, sy):
            return join_selectivity(sx, sy, op)

    rows = []
    for target in targets:
        (sx, sy), build_us = _timed(lambda: build(target))
        est, est_us = _timed(lambda: estimate(sx, sy))
        rows.append(
            ExperimentRow(
                statistics_target=target,
                estimate=est,
                exact=exact.selectivity,
                error=abs(est - exact.selectivity),
                est_time_us=est_us,
                build_time_us=build_us,
            )
        )
    return rows


def write_results_csv(rows, path_or_file) -> None:
    if hasattr(path_or_file, "write"):
        _write_csv(rows, path_or_file)
    else:
        with open(path_or_file, "w", encoding="utf-8", newline="") as fh:
            _write_csv(rows, fh)


def _write_csv(rows, fh) -> None:
    writer = csv.writer(fh)
    writer.writerow(CSV_HEADER)
    for r in rows:
        writer.writerow(
            [r.statistics_target, repr(float(r.estimate)), repr(float(r.exact)),
             repr(float(r.error)), repr(float(r.est_time_us)), repr(float(r.build_time_us))]
        )


def read_results_csv(path_or_file) -> list[ExperimentRow]:
    if hasattr(path_or_file, "read"):
        return _read_csv(path_or_file)
    with open(path_or_file, "r", encoding="utf-8", newline="") as fh:
        return _read_csv(fh)


def _read_csv(fh) -> list[ExperimentRow]:
    reader = csv.reader(fh)
    header = next(reader, None)
    if header != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {header!r}")
    rows = []
    for rec in reader:
        if not rec:
            continue
        rows.append(
            ExperimentRow(
                statistics_target=int(rec[0]),
                estimate=float(rec[1]),
                exact=float(rec[2]),
                error=float(rec[3]),
                est_time_us=float(rec[4]),
                build_time_us=float(rec[5]),
            )
        )
    return rows


def results_to_csv_text(rows) -> str:
    buf = io.StringIO()
    _write_csv(rows, buf)
    return buf.getvalue()
