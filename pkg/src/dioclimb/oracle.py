"""Exhaustive enumeration over the bounded positive lattice.

Deliberately naive so it can serve as ground truth for the climber: no
number theory, only per-variable bounds and partial-sum cutoffs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, TextIO

from .equation import Assignment, Equation, evaluate, variable_upper_bounds
from .errors import BoundsTooLargeError
from .search import SearchOutcome, SearchStatus, format_assignment, parse_assignment

DEFAULT_VOLUME_CEILING = 10**9


@dataclass(frozen=True)
class SolutionSet:
    equation: Equation
    solutions: tuple[Assignment, ...]
    search_bounds: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.solutions)

    def __contains__(self, x) -> bool:
        return tuple(x) in self.solutions

    def __bool__(self) -> bool:
        return bool(self.solutions)

    def to_csv(self) -> str:
        return "".join(format_assignment(x) + "\n" for x in self.solutions)

    def write_csv(self, fh: TextIO) -> None:
        fh.write(self.to_csv())


def read_solutions_csv(fh: TextIO) -> list[Assignment]:
    return [parse_assignment(line) for line in fh if line.strip()]


def lattice_volume(bounds) -> int:
    return math.prod(bounds)


def enumerate_solutions(
    eq: Equation,
    cap: Optional[int] = None,
    volume_ceiling: int = DEFAULT_VOLUME_CEILING,
) -> SolutionSet:
    """All positive solutions of ``eq`` in lexicographic order (first ``cap`` if given).

    Raises :class:`BoundsTooLargeError` when the bounding box holds more than
    ``volume_ceiling`` points.
    """
    eq.require_positive_coefficients()
    if cap is not None and cap < 1:
        raise ValueError("cap must be >= 1")
    bounds = variable_upper_bounds(eq)
    volume = lattice_volume(bounds)
    if volume > volume_ceiling:
        raise BoundsTooLargeError(
            f"lattice of {volume} points exceeds the ceiling of {volume_ceiling}"
        )
    if volume == 0:
        return SolutionSet(eq, (), bounds)

    n = eq.n
    # terms[i][v - 1] == a_i * v**p_i for v in 1..bound_i, ascending
    terms = [[a * v**p for v in range(1, b + 1)] for a, p, b in zip(eq.coeffs, eq.powers, bounds)]
    # the last coordinate is found by table lookup instead of a scan
    last_lookup = {t: v for v, t in enumerate(terms[-1], start=1)}
    # smallest possible contribution of variables i.. (each at 1)
    tail_min = [sum(eq.coeffs[i:]) for i in range(n + 1)]

    found: list[Assignment] = []
    prefix: list[int] = []

    def walk(i: int, partial: int) -> bool:
        if i == n - 1:
            v = last_lookup.get(eq.target - partial)
            if v is not None:
                found.append(tuple(prefix) + (v,))
                return cap is not None and len(found) >= cap
            return False
        for v, t in enumerate(terms[i], start=1):
            if partial + t + tail_min[i + 1] > eq.target:
                break
            prefix.append(v)
            done = walk(i + 1, partial + t)
            prefix.pop()
            if done:
                return True
        return False

    walk(0, 0)
    return SolutionSet(eq, tuple(found), bounds)


class Verdict(str, Enum):
    AGREE = "agree"
    CLIMBER_MISSED_SOLUTION = "climber-missed-solution"
    CLIMBER_FALSE_POSITIVE = "climber-false-positive"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class CertificationReport:
    verdict: Verdict
    oracle: Optional[SolutionSet]
    detail: str = ""


def certify(
    eq: Equation,
    outcome: SearchOutcome,
    volume_ceiling: int = DEFAULT_VOLUME_CEILING,
) -> CertificationReport:
    """Compare a climber outcome against full enumeration."""
    if outcome.status is SearchStatus.BUDGET_EXCEEDED:
        return CertificationReport(Verdict.INCONCLUSIVE, None, "search ran out of budget")
    oracle = enumerate_solutions(eq, volume_ceiling=volume_ceiling)
    if outcome.status is SearchStatus.SOLVED:
        x = outcome.solution
        if x in oracle:
            return CertificationReport(Verdict.AGREE, oracle)
        lhs = evaluate(eq, x)
        return CertificationReport(
            Verdict.CLIMBER_FALSE_POSITIVE, oracle, f"{format_assignment(x)} gives {lhs}, not {eq.target}"
        )
    if oracle:
        return CertificationReport(
            Verdict.CLIMBER_MISSED_SOLUTION,
            oracle,
            f"oracle found {len(oracle)} solutions, e.g. {format_assignment(oracle.solutions[0])}",
        )
    return CertificationReport(Verdict.AGREE, oracle)
