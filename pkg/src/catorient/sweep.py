"""Construct-and-verify sweeps over instance families, with deterministic reports.

Rows follow the enumeration order regardless of how many worker processes run,
so reports are byte-identical for any jobs value. Timing is off by default for
the same reason; --timing fills the elapsed_ms column for local profiling and
is the one field exempt from the determinism contract.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .construct import construct
from .model import CaterpillarSpec, verify_antimagic
from .oracle import enumerate_specs
from .spine import DEFAULT_NODE_LIMIT

CSV_COLUMNS = ("spec_id", "p", "k", "legs", "m", "result", "branch", "swap", "elapsed_ms")


@dataclass(frozen=True)
class SweepRow:
    spec_id: str
    p: int
    k: int
    legs: tuple[int, ...]
    m: int
    result: str  # "Pass" | "Fail" | "Error"
    branch: str
    swap: bool
    elapsed_ms: float | None
    detail: str = ""


@dataclass(frozen=True)
class SweepReport:
    rows: tuple[SweepRow, ...]

    @property
    def total(self) -> int:
        return len(self.rows)

    @property
    def passed(self) -> int:
        return sum(1 for r in self.rows if r.result == "Pass")

    @property
    def failed(self) -> int:
        return self.total - self.passed


def spec_id(spec: CaterpillarSpec) -> str:
    legs = ".".join(str(h) for h in spec.attachments)
    return f"p{spec.p}k{spec.k}-{legs}"


def run_one(
    p: int, k: int, legs: tuple[int, ...], node_limit: int | None, timing: bool
) -> SweepRow:
    spec = CaterpillarSpec(p, k, legs)
    started = time.perf_counter() if timing else None
    branch = ""
    swap = False
    try:
        lo, trace = construct(spec, node_limit=node_limit)
        branch = trace.branch
        swap = trace.swap_applied
        violation = verify_antimagic(spec, lo)
        result = "Pass" if violation is None else "Fail"
        detail = "" if violation is None else str(violation)
    except Exception as exc:  # recorded per row, never fatal to the sweep
        result = "Error"
        detail = f"{type(exc).__name__}: {exc}"
    elapsed = (time.perf_counter() - started) * 1000.0 if started is not None else None
    return SweepRow(
        spec_id=spec_id(spec),
        p=p,
        k=k,
        legs=legs,
        m=spec.m,
        result=result,
        branch=branch,
        swap=swap,
        elapsed_ms=elapsed,
        detail=detail,
    )


def _run_one_packed(args: tuple[int, int, tuple[int, ...], int | None, bool]) -> SweepRow:
    return run_one(*args)


def run_sweep(
    p_max: int,
    k_max: int,
    s_max: int,
    *,
    jobs: int = 1,
    node_limit: int | None = DEFAULT_NODE_LIMIT,
    timing: bool = False,
) -> SweepReport:
    """Construct and verify every instance in the family; rows in enumeration order."""
    payloads = [
        (spec.p, spec.k, spec.attachments, node_limit, timing)
        for spec in enumerate_specs(p_max, k_max, s_max)
    ]
    if jobs <= 1:
        rows = [_run_one_packed(payload) for payload in payloads]
    else:
        chunk = max(1, len(payloads) // (jobs * 8))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_run_one_packed, payloads, chunksize=chunk))
    return SweepReport(tuple(rows))


def _csv_cell(row: SweepRow, column: str) -> str:
    if column == "legs":
        return ".".join(str(h) for h in row.legs)
    if column == "swap":
        return "true" if row.swap else "false"
    if column == "elapsed_ms":
        return "" if row.elapsed_ms is None else f"{row.elapsed_ms:.3f}"
    return str(getattr(row, column))


def report_to_csv(report: SweepReport) -> str:
    lines = [",".join(CSV_COLUMNS)]
    lines.extend(",".join(_csv_cell(row, col) for col in CSV_COLUMNS) for row in report.rows)
    return "\n".join(lines) + "\n"


def report_to_json(report: SweepReport) -> str:
    doc = {
        "rows": [
            {
                "spec_id": r.spec_id,
                "p": r.p,
                "k": r.k,
                "legs": list(r.legs),
                "m": r.m,
                "result": r.result,
                "branch": r.branch,
                "swap": r.swap,
                "elapsed_ms": r.elapsed_ms,
                "detail": r.detail,
            }
            for r in report.rows
        ],
        "summary": {"total": report.total, "passed": report.passed, "failed": report.failed},
    }
    return json.dumps(doc, indent=2) + "\n"
