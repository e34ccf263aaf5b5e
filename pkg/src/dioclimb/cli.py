"""Command-line entry point: ``dioclimb {solve,oracle,bench}``.

Exit codes: 0 solved / agreed / all cases passed, 1 unsolvable or failures,
2 invalid input, 3 expansion budget exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from .bench import SUITE_NAMES, report_to_text, run_suite, suite_cases, write_report
from .equation import Equation, parse_equation
from .errors import BoundsTooLargeError, DiophantineError
from .oracle import Verdict, certify, enumerate_solutions
from .search import SearchConfig, SearchStatus, climb, format_assignment, write_trace_csv

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _add_equation_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("equation", nargs="?", help='equation text, e.g. "x1^2 + x2^2 = 625"')
    p.add_argument("--file", help="read the equation from this file instead")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dioclimb", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    solve = sub.add_parser("solve", help="search for one positive-integer solution")
    _add_equation_source(solve)
    solve.add_argument("--max-expansions", type=_positive_int, default=1_000_000)
    solve.add_argument("--trace", help="write the search trace CSV here")
    solve.add_argument("--check", action="store_true", help="cross-check the result with the oracle")

    oracle = sub.add_parser("oracle", help="enumerate all positive-integer solutions")
    _add_equation_source(oracle)
    oracle.add_argument("--cap", type=_positive_int, help="stop after this many solutions")

    bench = sub.add_parser("bench", help="run a built-in benchmark suite")
    bench.add_argument("suite", choices=SUITE_NAMES + ("all",))
    bench.add_argument("--max-expansions", type=_positive_int, default=1_000_000)
    bench.add_argument("--out", help="directory for report.csv, report.txt and traces/")
    return parser


def _load_equation(args) -> Equation:
    if (args.equation is None) == (args.file is None):
        raise DiophantineError("give exactly one of an inline equation or --file")
    if args.file is not None:
        try:
            with open(args.file) as fh:
                text = fh.read()
        except OSError as exc:
            raise DiophantineError(f"cannot read {args.file}: {exc.strerror}")
        return parse_equation(text.strip())
    return parse_equation(args.equation)


def _solve(args) -> int:
    eq = _load_equation(args)
    outcome = climb(eq, SearchConfig(max_expansions=args.max_expansions, trace_enabled=args.trace is not None))
    if args.trace is not None:
        with open(args.trace, "w", newline="") as fh:
            write_trace_csv(outcome.trace, fh)

    if outcome.status is SearchStatus.SOLVED:
        print(f"SOLVED x={format_assignment(outcome.solution)}")
        code = EXIT_OK
    elif outcome.status is SearchStatus.UNSOLVABLE:
        print("UNSOLVABLE")
        code = EXIT_FAIL
    else:
        print("BUDGET")
        code = EXIT_BUDGET

    if args.check and outcome.status is not SearchStatus.BUDGET_EXCEEDED:
        try:
            report = certify(eq, outcome)
        except BoundsTooLargeError as exc:
            print(f"check skipped: {exc}", file=sys.stderr)
        else:
            if report.verdict is not Verdict.AGREE:
                print(f"check failed: {report.verdict.value}: {report.detail}", file=sys.stderr)
                code = EXIT_FAIL
    return code


def _oracle(args) -> int:
    solutions = enumerate_solutions(_load_equation(args), cap=args.cap)
    sys.stdout.write(solutions.to_csv())
    return EXIT_OK if solutions else EXIT_FAIL


def _bench(args) -> int:
    config = SearchConfig(max_expansions=args.max_expansions)
    cases = suite_cases(args.suite)
    trace_dir = None if args.out is None else os.path.join(args.out, "traces")
    report = run_suite(cases, config, trace_dir=trace_dir)
    if args.out is not None:
        write_report(report, args.out)
    sys.stdout.write(report_to_text(report))
    return EXIT_OK if report.all_passed else EXIT_FAIL


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"solve": _solve, "oracle": _oracle, "bench": _bench}[args.command]
    try:
        return handler(args)
    except DiophantineError as exc:
        print(f"dioclimb: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
