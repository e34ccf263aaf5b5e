"""Benchmark suites of published equations and their report writers.

Each case is solved by :func:`~dioclimb.search.climb`, re-checked by exact
evaluation, and certified against the oracle when its lattice is small
enough. Reports carry no timestamps and, unless asked, no timings, so
repeated runs are byte-identical.
"""

from __future__ import annotations

import csv
import io
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from .equation import Assignment, Equation, is_solution, make_equation, render
from .errors import BoundsTooLargeError, DiophantineError
from .oracle import Verdict, certify
from .search import (
    SearchConfig,
    SearchOutcome,
    SearchStatus,
    audit_trace,
    climb,
    format_assignment,
    write_trace_csv,
)

ORACLE_INFEASIBLE = "oracle-infeasible"


@dataclass(frozen=True)
class BenchCase:
    label: str
    equation: Equation
    expected_solution: Optional[Assignment] = None
    published_iterations: Optional[int] = None

    def __post_init__(self):
        if self.expected_solution is not None and not is_solution(
            self.equation, self.expected_solution
        ):
            raise DiophantineError(
                f"{self.label}: listed solution {self.expected_solution} does not satisfy {render(self.equation)}"
            )


def _sum_of_squares(n: int, target: int) -> Equation:
    return make_equation([1] * n, [2] * n, target)


_TABLE1 = [
    # degree, N, listed solution, listed iterations
    (2, 625, (24, 7), 29),
    (3, 1008, (10, 2), 10),
    (4, 1921, (6, 5), 9),
    (5, 19932, (7, 5), 10),
    (6, 47385, (6, 3), 7),
    (7, 4799353, (9, 4), 11),
    (8, 16777472, (8, 2), 8),
    (9, 1000019683, (10, 3), 11),
    (10, 1356217073, (8, 7), 13),
]

_TABLE2 = [
    # variables, N, listed solution, listed iterations
    (2, 149, (10, 7), 34),
    (3, 230, (15, 2, 1), 15),
    (4, 295, (17, 2, 1, 1), 17),
    (5, 325, (17, 1, 1, 3, 5), 22),
    (6, 420, (20, 1, 1, 1, 1, 4), 22),
    # published with six coordinates for seven variables; the trailing 1 restores the sum
    (7, 450, (21, 2, 1, 1, 1, 1, 1), 21),
    (8, 590, (23, 2, 1, 1, 1, 1, 2, 7), 86),
    (9, 720, (26, 2, 1, 1, 1, 2, 2, 2, 5), 42),
    (10, 956, (30, 2, 1, 1, 1, 1, 2, 2, 2, 6), 48),
]

SUITE_NAMES = ("table1", "table2", "example100")


def builtin_suites() -> dict[str, list[BenchCase]]:
    """The published benchmark equations keyed by suite name."""
    table1 = [
        BenchCase(f"table1-{row}", make_equation([1, 1], [p, p], n), sol, iters)
        for row, (p, n, sol, iters) in enumerate(_TABLE1, start=1)
    ]
    table2 = [
        BenchCase(f"table2-{row}", _sum_of_squares(nvars, n), sol, iters)
        for row, (nvars, n, sol, iters) in enumerate(_TABLE2, start=1)
    ]
    example100 = [BenchCase("example100", _sum_of_squares(2, 100))]
    return {"table1": table1, "table2": table2, "example100": example100}


def suite_cases(name: str) -> list[BenchCase]:
    suites = builtin_suites()
    if name == "all":
        return [case for key in SUITE_NAMES for case in suites[key]]
    if name not in suites:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES + ('all',))}")
    return suites[name]


@dataclass(frozen=True)
class BenchRow:
    label: str
    equation: str
    status: str
    solution: Optional[Assignment]
    verified: bool
    expansions: int
    nodes_generated: int
    backtracks: int
    oracle_verdict: str
    trace_ok: bool
    published_solution: Optional[Assignment]
    published_iterations: Optional[int]
    wall_time: float
    error: str = ""
    outcome: Optional[SearchOutcome] = None

    @property
    def passed(self) -> bool:
        return (
            self.status == SearchStatus.SOLVED.value
            and self.verified
            and self.trace_ok
            and self.oracle_verdict in (Verdict.AGREE.value, ORACLE_INFEASIBLE)
        )


@dataclass(frozen=True)
class BenchReport:
    rows: tuple[BenchRow, ...]

    @property
    def summary(self) -> dict[str, int]:
        return {
            "cases": len(self.rows),
            "solved": sum(r.status == SearchStatus.SOLVED.value for r in self.rows),
            "unsolvable": sum(r.status == SearchStatus.UNSOLVABLE.value for r in self.rows),
            "budget": sum(r.status == SearchStatus.BUDGET_EXCEEDED.value for r in self.rows),
            "errors": sum(r.status == "error" for r in self.rows),
            "passed": sum(r.passed for r in self.rows),
        }

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.rows)


def run_case(case: BenchCase, config: SearchConfig) -> BenchRow:
    start = time.perf_counter()
    try:
        outcome = climb(case.equation, config)
    except DiophantineError as exc:
        return BenchRow(
            label=case.label, equation=render(case.equation), status="error",
            solution=None, verified=False, expansions=0, nodes_generated=0,
            backtracks=0, oracle_verdict="", trace_ok=False,
            published_solution=case.expected_solution,
            published_iterations=case.published_iterations,
            wall_time=time.perf_counter() - start, error=str(exc),
        )
    elapsed = time.perf_counter() - start

    # never trust the climber's own claim
    verified = outcome.solved and is_solution(case.equation, outcome.solution)
    try:
        verdict = certify(case.equation, outcome).verdict.value
    except BoundsTooLargeError:
        verdict = ORACLE_INFEASIBLE
    trace_ok = not config.trace_enabled or not audit_trace(outcome.trace, outcome)
    return BenchRow(
        label=case.label,
        equation=render(case.equation),
        status=outcome.status.value,
        solution=outcome.solution,
        verified=verified,
        expansions=outcome.expansions,
        nodes_generated=outcome.nodes_generated,
        backtracks=outcome.backtracks,
        oracle_verdict=verdict,
        trace_ok=trace_ok,
        published_solution=case.expected_solution,
        published_iterations=case.published_iterations,
        wall_time=elapsed,
        outcome=outcome,
    )


def run_suite(
    cases: Sequence[BenchCase],
    config: Optional[SearchConfig] = None,
    trace_dir: Optional[str] = None,
    workers: int = 1,
) -> BenchReport:
    """Run every case; a failing case becomes an ``error`` row, never an exception.

    With ``trace_dir`` set, writes ``<label>.csv`` traces there.
    """
    if not cases:
        raise ValueError("suite is empty")
    config = config or SearchConfig()
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            rows = list(pool.map(lambda c: run_case(c, config), cases))
    else:
        rows = [run_case(c, config) for c in cases]

    if trace_dir is not None:
        os.makedirs(trace_dir, exist_ok=True)
        for row in rows:
            if row.outcome is not None:
                path = os.path.join(trace_dir, f"{row.label}.csv")
                with open(path, "w", newline="") as fh:
                    write_trace_csv(row.outcome.trace, fh)
    return BenchReport(tuple(rows))


REPORT_COLUMNS = [
    "label", "equation", "status", "solution", "verified", "expansions",
    "nodes_generated", "backtracks", "oracle_verdict", "trace_ok",
    "published_solution", "published_iterations",
]


def _fmt(x: Optional[Assignment]) -> str:
    return "" if x is None else format_assignment(x)


def _row_values(row: BenchRow, include_timing: bool) -> list[str]:
    values = [
        row.label, row.equation, row.status, _fmt(row.solution), str(row.verified).lower(),
        str(row.expansions), str(row.nodes_generated), str(row.backtracks),
        row.oracle_verdict, str(row.trace_ok).lower(), _fmt(row.published_solution),
        "" if row.published_iterations is None else str(row.published_iterations),
    ]
    if include_timing:
        values.append(f"{row.wall_time:.6f}")
    return values


def report_to_csv(report: BenchReport, include_timing: bool = False) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(REPORT_COLUMNS + (["wall_time_s"] if include_timing else []))
    for row in report.rows:
        writer.writerow(_row_values(row, include_timing))
    return buf.getvalue()


def report_to_text(report: BenchReport, include_timing: bool = False) -> str:
    headers = ["case", "equation", "status", "solution", "exp", "gen", "bt", "oracle", "published", "pub it"]
    if include_timing:
        headers.append("time s")
    table = []
    for r in report.rows:
        line = [
            r.label, r.equation, r.status, _fmt(r.solution) or "-", str(r.expansions),
            str(r.nodes_generated), str(r.backtracks), r.oracle_verdict or "-",
            _fmt(r.published_solution) or "-", "-" if r.published_iterations is None else str(r.published_iterations),
        ]
        if include_timing:
            line.append(f"{r.wall_time:.4f}")
        table.append(line)
    widths = [max(len(h), *(len(t[k]) for t in table)) for k, h in enumerate(headers)]
    out = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    out.append("  ".join("-" * w for w in widths))
    out += ["  ".join(c.ljust(w) for c, w in zip(t, widths)).rstrip() for t in table]
    s = report.summary
    out.append("")
    out.append(
        f"{s['passed']}/{s['cases']} passed; solved {s['solved']}, unsolvable {s['unsolvable']}, "
        f"budget {s['budget']}, errors {s['errors']}"
    )
    return "\n".join(out) + "\n"


def write_report(report: BenchReport, out_dir: str, include_timing: bool = False) -> None:
    """Write ``report.csv`` and ``report.txt`` into ``out_dir``."""
    os.makedirs(out_dir, exist_ok=True)
    with open(os.path.join(out_dir, "report.csv"), "w", newline="") as fh:
        fh.write(report_to_csv(report, include_timing))
    with open(os.path.join(out_dir, "report.txt"), "w", newline="") as fh:
        fh.write(report_to_text(report, include_timing))
