"""Command-line interface: construct, verify, sweep, and oracle subcommands.

Exit codes are stable for scripting:

  0  success (construct verified, verify passed, sweep all-pass, oracle found)
  1  malformed input (diagnostic names the offending field)
  2  unsupported shape, or instance too large for the oracle
  3  search failure (spine budget exhausted, oracle budget exceeded)
  4  verification violation (verify command, or a sweep with failures)
  5  oracle exhausted the space without a solution
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .construct import construct
from .errors import (
    BudgetExceededError,
    FormatError,
    InstanceTooLargeError,
    InvalidSpecError,
    SearchExhaustedError,
    UnsupportedShapeError,
)
from .io import export_dot, export_json, parse_instance, parse_result
from .model import verify_antimagic
from .oracle import BUDGET_EXCEEDED, FOUND, SearchBudget, brute_force_antimagic
from .spine import DEFAULT_NODE_LIMIT
from .sweep import report_to_csv, report_to_json, run_sweep

EXIT_OK = 0
EXIT_BAD_INPUT = 1
EXIT_UNSUPPORTED = 2
EXIT_SEARCH_FAILED = 3
EXIT_VIOLATION = 4
EXIT_NOT_FOUND = 5


def _read_text(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _fail(message: str, code: int) -> int:
    print(message, file=sys.stderr)
    return code


def cmd_construct(args: argparse.Namespace) -> int:
    try:
        spec = parse_instance(_read_text(args.instance))
    except (FormatError, InvalidSpecError, OSError) as exc:
        return _fail(f"invalid instance: {exc}", EXIT_BAD_INPUT)
    budget = args.budget if args.budget is not None else DEFAULT_NODE_LIMIT
    try:
        lo, trace = construct(spec, node_limit=budget)
    except UnsupportedShapeError as exc:
        return _fail(f"unsupported shape: {exc}", EXIT_UNSUPPORTED)
    except (BudgetExceededError, SearchExhaustedError) as exc:
        return _fail(f"spine search failed: {exc}", EXIT_SEARCH_FAILED)
    violation = verify_antimagic(spec, lo)
    if violation is not None:  # construct re-verifies internally; belt and braces
        return _fail(str(violation), EXIT_VIOLATION)
    text = export_dot(spec, lo) if args.format == "dot" else export_json(spec, lo)
    _write_output(text, args.out)
    print(f"constructed {spec.m}-edge orientation, branch={trace.branch}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        spec, lo = parse_result(_read_text(args.result))
    except (FormatError, InvalidSpecError, OSError) as exc:
        return _fail(f"invalid result file: {exc}", EXIT_BAD_INPUT)
    violation = verify_antimagic(spec, lo)
    if violation is not None:
        print(str(violation))
        return EXIT_VIOLATION
    print("PASS")
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    report = run_sweep(
        args.p_max,
        args.k_max,
        args.s_max,
        jobs=args.jobs,
        node_limit=args.budget if args.budget is not None else DEFAULT_NODE_LIMIT,
        timing=args.timing,
    )
    csv_text = report_to_csv(report)
    if args.report is not None:
        base = Path(args.report)
        base.parent.mkdir(parents=True, exist_ok=True)
        Path(f"{base}.csv").write_text(csv_text, encoding="utf-8")
        Path(f"{base}.json").write_text(report_to_json(report), encoding="utf-8")
    else:
        sys.stdout.write(csv_text)
    print(
        f"swept {report.total} instances: {report.passed} passed, {report.failed} failed",
        file=sys.stderr,
    )
    return EXIT_OK if report.failed == 0 else EXIT_VIOLATION


def cmd_oracle(args: argparse.Namespace) -> int:
    try:
        spec = parse_instance(_read_text(args.instance))
    except (FormatError, InvalidSpecError, OSError) as exc:
        return _fail(f"invalid instance: {exc}", EXIT_BAD_INPUT)
    try:
        budget = SearchBudget(max_edges=args.max_edges, node_limit=args.node_limit)
        result = brute_force_antimagic(spec, budget)
    except (InstanceTooLargeError, ValueError) as exc:
        return _fail(f"instance too large: {exc}", EXIT_UNSUPPORTED)
    if result.status == FOUND:
        assert result.orientation is not None
        _write_output(export_json(spec, result.orientation), args.out)
        print(f"found after {result.nodes} nodes", file=sys.stderr)
        return EXIT_OK
    if result.status == BUDGET_EXCEEDED:
        return _fail(f"search budget exceeded after {result.nodes} nodes", EXIT_SEARCH_FAILED)
    return _fail(f"no antimagic orientation found ({result.nodes} nodes)", EXIT_NOT_FOUND)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catorient",
        description="Construct and verify antimagic orientations of subdivided caterpillars.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_construct = sub.add_parser("construct", help="construct a labeled orientation")
    p_construct.add_argument("instance", help="instance JSON file {p, k, legs}")
    p_construct.add_argument("--format", choices=("json", "dot"), default="json")
    p_construct.add_argument("--out", default=None, help="output file (default: stdout)")
    p_construct.add_argument("--budget", type=int, default=None, help="spine search node limit")
    p_construct.set_defaults(func=cmd_construct)

    p_verify = sub.add_parser("verify", help="verify a result file")
    p_verify.add_argument("result", help="result JSON file produced by construct")
    p_verify.set_defaults(func=cmd_verify)

    p_sweep = sub.add_parser("sweep", help="construct+verify a whole instance family")
    p_sweep.add_argument("--p-max", type=int, required=True)
    p_sweep.add_argument("--k-max", type=int, required=True)
    p_sweep.add_argument("--s-max", type=int, required=True)
    p_sweep.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    p_sweep.add_argument("--report", default=None, help="base path for .csv/.json reports")
    p_sweep.add_argument("--budget", type=int, default=None, help="spine search node limit")
    p_sweep.add_argument(
        "--timing",
        action="store_true",
        help="record per-row elapsed_ms (breaks byte-for-byte report determinism)",
    )
    p_sweep.set_defaults(func=cmd_sweep)

    p_oracle = sub.add_parser("oracle", help="brute-force a tiny instance")
    p_oracle.add_argument("instance", help="instance JSON file {p, k, legs}")
    p_oracle.add_argument("--max-edges", type=int, default=9)
    p_oracle.add_argument("--node-limit", type=int, default=None)
    p_oracle.add_argument("--out", default=None, help="output file (default: stdout)")
    p_oracle.set_defaults(func=cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entrypoint() -> None:
    sys.exit(main())
