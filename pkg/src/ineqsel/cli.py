"""Command-line interface.

Subcommands: gen, analyze, estimate, oracle, sweep.  Exit status is 0 on
success, 2 for usage errors, 1 for data errors (unreadable or malformed
files, insufficient statistics).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import harness
from .operators import RangeOp, ScalarOp, parse_range_op, parse_scalar_op
from .estimator import join_selectivity
from .oracle import exact_join, exact_range_join
from .ranges import (
    RangeStats,
    analyze_range_column,
    load_range_stats,
    range_join_selectivity,
    save_range_stats,
)
from .stats import AttributeStats, analyze_column, load_stats, save_stats

SCALAR_OPS = ("lt", "le", "gt", "ge")
RANGE_OPS = tuple(op.value for op in RangeOp)
ALL_OPS = SCALAR_OPS + RANGE_OPS


def _parse_op(text: str) -> ScalarOp | RangeOp:
    if text in SCALAR_OPS:
        return parse_scalar_op(text)
    return parse_range_op(text)


def _parse_targets(spec: str) -> list[int]:
    parts = spec.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("targets must be LO:HI:STEP")
    try:
        lo, hi, step = (int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError("targets must be LO:HI:STEP") from None
    if lo < 1 or hi < lo or step < 1:
        raise argparse.ArgumentTypeError("targets must satisfy 1 <= LO <= HI, STEP >= 1")
    return list(range(lo, hi + 1, step))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ineqsel",
        description="Build column statistics and estimate inequality-join selectivity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a column data file")
    p.add_argument("--kind", required=True, choices=harness.DATASET_KINDS)
    p.add_argument("--rows", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)

    p = sub.add_parser("analyze", help="build statistics for a column file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)

    p = sub.add_parser("estimate", help="estimate join selectivity from statistics")
    p.add_argument("--stats-x", required=True)
    p.add_argument("--stats-y", required=True)
    p.add_argument("--op", required=True, choices=ALL_OPS)

    p = sub.add_parser("oracle", help="exact join count from raw column files")
    p.add_argument("--in-x", dest="in_x", required=True)
    p.add_argument("--in-y", dest="in_y", required=True)
    p.add_argument("--op", required=True, choices=ALL_OPS)

    p = sub.add_parser("sweep", help="error-vs-statistics-target experiment")
    p.add_argument("--in-x", dest="in_x", required=True)
    p.add_argument("--in-y", dest="in_y", required=True)
    p.add_argument("--op", required=True, choices=ALL_OPS)
    p.add_argument("--targets", type=_parse_targets, required=True, metavar="LO:HI:STEP")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)

    return parser


def _cmd_gen(args, parser) -> int:
    if args.kind not in ("running-example-r1", "running-example-r2") and args.rows < 1:
        parser.error("--rows must be at least 1")
    if args.kind in harness.RANGE_KINDS:
        values = harness.generate_range_column(args.rows, args.seed)
        harness.write_range_column(args.out, values)
    else:
        values = harness.generate_scalar_column(args.kind, args.rows, args.seed)
        harness.write_scalar_column(args.out, values)
    return 0


def _cmd_analyze(args) -> int:
    if args.target < 1:
        raise ValueError("statistics target must be at least 1")
    if harness.looks_like_range_file(args.infile):
        values = harness.read_range_column(args.infile)
        doc = save_range_stats(analyze_range_column(values, args.target, args.seed))
    else:
        values = harness.read_scalar_column(args.infile)
        doc = save_stats(analyze_column(values, args.target, args.seed))
    with open(args.out, "wb") as fh:
        fh.write(doc)
    return 0


def _load_any_stats(path: str):
    """Load a statistics file, scalar or range (sniffed by its fields)."""
    with open(path, "rb") as fh:
        data = fh.read()
    try:
        doc = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ValueError(f"{path}: not valid JSON: {exc}") from None
    if isinstance(doc, dict) and "lower_stats" in doc:
        return load_range_stats(data)
    return load_stats(data)


def _cmd_estimate(args) -> int:
    op = _parse_op(args.op)
    sx = _load_any_stats(args.stats_x)
    sy = _load_any_stats(args.stats_y)
    if isinstance(op, RangeOp):
        if not isinstance(sx, RangeStats) or not isinstance(sy, RangeStats):
            raise ValueError(f"operator {args.op} needs range statistics files")
        result = range_join_selectivity(sx, sy, op)
    else:
        if not isinstance(sx, AttributeStats) or not isinstance(sy, AttributeStats):
            raise ValueError(f"operator {args.op} needs scalar statistics files")
        result = join_selectivity(sx, sy, op)
    print(repr(result))
    return 0


def _cmd_oracle(args) -> int:
    op = _parse_op(args.op)
    if isinstance(op, RangeOp):
        xs = harness.read_range_column(args.in_x)
        ys = harness.read_range_column(args.in_y)
        count = exact_range_join(xs, ys, op)
    else:
        xs = harness.read_scalar_column(args.in_x)
        ys = harness.read_scalar_column(args.in_y)
        count = exact_join(xs, ys, op)
    print(f"{count.qualifying}/{count.total}")
    return 0


def _cmd_sweep(args) -> int:
    op = _parse_op(args.op)
    rows = harness.run_sweep(args.in_x, args.in_y, op, args.targets, args.seed)
    harness.write_results_csv(rows, args.out)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "gen":
            return _cmd_gen(args, parser)
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "estimate":
            return _cmd_estimate(args)
        if args.command == "oracle":
            return _cmd_oracle(args)
        if args.command == "sweep":
            return _cmd_sweep(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
