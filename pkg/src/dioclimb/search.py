"""Steepest-ascent hill climbing with backtracking over the positive lattice.

The climb starts at the all-ones vector. Expanding a node produces one child
per variable, that variable incremented by one. The best child (smallest
``h``) becomes the current node when it strictly improves on it; every other
child waits in the frontier. When no child improves, the search backtracks
to the best node in the frontier. Children with ``h < 0`` are never queued:
with positive coefficients every term only grows, so nothing below them can
reach ``h == 0``.
"""

from __future__ import annotations

import csv
import heapq
import io
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, TextIO

from .equation import Assignment, Equation, heuristic, variable_upper_bounds
from .errors import NonPositiveBudgetError


class SearchStatus(str, Enum):
    SOLVED = "solved"
    UNSOLVABLE = "unsolvable"
    BUDGET_EXCEEDED = "budget"


class Action(str, Enum):
    EXPAND = "expand"
    PRUNE = "prune"
    BACKTRACK = "backtrack"
    GOAL = "goal"
    EXHAUSTED = "exhausted"
    BUDGET = "budget"


TERMINAL_ACTIONS = frozenset({Action.GOAL, Action.EXHAUSTED, Action.BUDGET})

_TERMINAL_FOR_STATUS = {
    SearchStatus.SOLVED: Action.GOAL,
    SearchStatus.UNSOLVABLE: Action.EXHAUSTED,
    SearchStatus.BUDGET_EXCEEDED: Action.BUDGET,
}


@dataclass(frozen=True)
class Node:
    x: Assignment
    h: int
    id: int
    parent: Optional[int] = None


@dataclass(frozen=True)
class TraceEvent:
    step: int
    action: Action
    x: Assignment
    h: int
    nodes_generated: int


SearchTrace = tuple[TraceEvent, ...]


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for :func:`climb`.

    ``prune_negative=False`` keeps nodes with ``h < 0`` in play instead of
    discarding them; the per-variable bounds then keep the lattice finite.
    It exists to check empirically that pruning never hides a solution.
    """

    max_expansions: int = 1_000_000
    trace_enabled: bool = True
    prune_negative: bool = True

    def __post_init__(self):
        if self.max_expansions < 1:
            raise NonPositiveBudgetError(
                f"max_expansions must be >= 1, got {self.max_expansions}"
            )


@dataclass(frozen=True)
class SearchOutcome:
    status: SearchStatus
    solution: Optional[Assignment]
    expansions: int
    nodes_generated: int
    backtracks: int
    trace: SearchTrace = field(default=(), repr=False)

    @property
    def solved(self) -> bool:
        return self.status is SearchStatus.SOLVED


def _rank(node: Node) -> tuple[bool, int]:
    # Reduces to plain h whenever pruning is on (no negative nodes survive).
    # With pruning off, overshooting nodes rank behind every non-negative one.
    return (node.h < 0, abs(node.h))


class Frontier:
    """Generated-but-unexpanded nodes, popped best ``h`` first, ties by id.

    Holds at most one node per x-vector; :meth:`push` keeps the earlier one.
    """

    def __init__(self, nodes: Iterable[Node] = ()):
        self._heap: list[tuple[tuple[bool, int], int, Node]] = []
        self._live: dict[Assignment, int] = {}
        for node in nodes:
            self.push(node)

    def __len__(self) -> int:
        return len(self._live)

    def __contains__(self, x) -> bool:
        return tuple(x) in self._live

    def push(self, node: Node) -> bool:
        if node.x in self._live:
            return False
        self._live[node.x] = node.id
        heapq.heappush(self._heap, (_rank(node), node.id, node))
        return True

    def discard(self, x: Assignment) -> None:
        self._live.pop(x, None)

    def pop(self) -> Optional[Node]:
        """Remove and return the best node, or ``None`` when empty."""
        while self._heap:
            _, node_id, node = heapq.heappop(self._heap)
            if self._live.get(node.x) == node_id:
                del self._live[node.x]
                return node
        return None


def frontier_pop(frontier: Frontier) -> Optional[Node]:
    return frontier.pop()


def initial_node(eq: Equation) -> Node:
    eq.require_positive_coefficients()
    x = (1,) * eq.n
    return Node(x=x, h=heuristic(eq, x), id=1)


def successors(eq: Equation, node: Node, first_id: Optional[int] = None) -> list[Node]:
    """One child per variable, that variable bumped by one, in variable order.

    Ids are assigned consecutively from ``first_id`` (default ``node.id + 1``).
    """
    next_id = node.id + 1 if first_id is None else first_id
    children = []
    for i, (a, p) in enumerate(zip(eq.coeffs, eq.powers)):
        xi = node.x[i]
        h = node.h - a * ((xi + 1) ** p - xi**p)
        x = node.x[:i] + (xi + 1,) + node.x[i + 1 :]
        children.append(Node(x=x, h=h, id=next_id + i, parent=node.id))
    return children


class _Recorder:
    def __init__(self, enabled: bool):
        self.enabled = enabled
        self.events: list[TraceEvent] = []

    def add(self, action: Action, node: Node, nodes_generated: int) -> None:
        if self.enabled:
            self.events.append(
                TraceEvent(len(self.events) + 1, action, node.x, node.h, nodes_generated)
            )


def climb(eq: Equation, config: Optional[SearchConfig] = None) -> SearchOutcome:
    """Search for a positive-integer solution of ``eq``.

    Returns ``SOLVED`` with the first solution generated, ``UNSOLVABLE`` once
    every node with ``h >= 0`` has been expanded, or ``BUDGET_EXCEEDED`` after
    ``config.max_expansions`` expansions. Deterministic: equal-``h`` ties go to
    the earliest generated node, which favours lower variable indices.
    """
    config = config or SearchConfig()
    current = initial_node(eq)
    rec = _Recorder(config.trace_enabled)

    if config.prune_negative:
        def admissible(node: Node) -> bool:
            return node.h >= 0
    else:
        bounds = variable_upper_bounds(eq)

        def admissible(node: Node) -> bool:
            return all(xi <= b for xi, b in zip(node.x, bounds))

    generated = expansions = backtracks = 0

    def finish(status, node, solution=None) -> SearchOutcome:
        rec.add(_TERMINAL_FOR_STATUS[status], node, generated)
        return SearchOutcome(
            status, solution, expansions, generated, backtracks, tuple(rec.events)
        )

    if current.h == 0:
        return finish(SearchStatus.SOLVED, current, current.x)
    if not admissible(current):
        return finish(SearchStatus.UNSOLVABLE, current)

    visited = {current.x}
    frontier = Frontier()
    next_id = current.id + 1

    while True:
        if expansions >= config.max_expansions:
            return finish(SearchStatus.BUDGET_EXCEEDED, current)

        children = successors(eq, current, next_id)
        next_id += len(children)
        generated += len(children)
        expansions += 1
        rec.add(Action.EXPAND, current, generated)

        survivors = []
        for child in children:
            if not admissible(child):
                rec.add(Action.PRUNE, child, generated)
            elif child.h == 0:
                return finish(SearchStatus.SOLVED, child, child.x)
            elif child.x not in visited:
                survivors.append(child)

        best = min(survivors, key=lambda c: (_rank(c), c.id), default=None)
        if best is not None and _rank(best) < _rank(current):
            frontier.discard(best.x)
            for child in survivors:
                if child is not best:
                    frontier.push(child)
            current = best
        else:
            for child in survivors:
                frontier.push(child)
            popped = frontier.pop()
            if popped is None:
                return finish(SearchStatus.UNSOLVABLE, current)
            current = popped
            backtracks += 1
            rec.add(Action.BACKTRACK, current, generated)
        visited.add(current.x)


TRACE_HEADER = ("step", "action", "x", "h", "nodes_generated")


def format_assignment(x: Iterable[int]) -> str:
    return " ".join(str(v) for v in x)


def parse_assignment(text: str) -> Assignment:
    return tuple(int(v) for v in text.split())


def write_trace_csv(trace: SearchTrace, fh: TextIO) -> None:
    """CSV with header ``step,action,x,h,nodes_generated``; x is one quoted field."""
    fh.write(",".join(TRACE_HEADER) + "\n")
    for ev in trace:
        fh.write(
            f'{ev.step},{ev.action.value},"{format_assignment(ev.x)}",{ev.h},{ev.nodes_generated}\n'
        )


def trace_to_csv(trace: SearchTrace) -> str:
    buf = io.StringIO()
    write_trace_csv(trace, buf)
    return buf.getvalue()


def read_trace_csv(fh: TextIO) -> SearchTrace:
    reader = csv.reader(fh)
    header = next(reader)
    if tuple(header) != TRACE_HEADER:
        raise ValueError(f"unexpected trace header {header}")
    return tuple(
        TraceEvent(int(step), Action(action), parse_assignment(x), int(h), int(ng))
        for step, action, x, h, ng in reader
    )


def _is_child(parent: Assignment, child: Assignment) -> bool:
    diffs = [c - p for p, c in zip(parent, child)]
    return len(parent) == len(child) and sorted(diffs) == [0] * (len(diffs) - 1) + [1]


def audit_trace(trace: SearchTrace, outcome: Optional[SearchOutcome] = None) -> list[str]:
    """Check a trace's structural invariants; returns a list of violations.

    Checked: consecutive steps, a single terminal event at the end,
    non-decreasing node counts, strictly falling ``h`` along every run of
    expansions without an intervening backtrack, and that each expansion
    follows either a child of the previous one or the node just backtracked to.
    With ``outcome`` given, its counters must agree with the trace.
    """
    problems = []
    for k, ev in enumerate(trace, start=1):
        if ev.step != k:
            problems.append(f"step {ev.step} at position {k}")
            break
    terminals = [ev for ev in trace if ev.action in TERMINAL_ACTIONS]
    if len(terminals) != 1:
        problems.append(f"{len(terminals)} terminal events")
    elif trace[-1].action not in TERMINAL_ACTIONS:
        problems.append("terminal event is not last")
    for prev, ev in zip(trace, trace[1:]):
        if ev.nodes_generated < prev.nodes_generated:
            problems.append(f"step {ev.step}: nodes_generated decreased")

    last_expand: Optional[TraceEvent] = None
    backtracked_to: Optional[Assignment] = None
    for ev in trace:
        if ev.action is Action.BACKTRACK:
            backtracked_to = ev.x
        elif ev.action is Action.EXPAND:
            if last_expand is not None:
                if backtracked_to is not None:
                    if ev.x != backtracked_to:
                        problems.append(f"step {ev.step}: expanded {ev.x} after backtracking to {backtracked_to}")
                else:
                    if ev.h >= last_expand.h:
                        problems.append(f"step {ev.step}: h {ev.h} did not fall below {last_expand.h}")
                    if not _is_child(last_expand.x, ev.x):
                        problems.append(f"step {ev.step}: {ev.x} is not a child of {last_expand.x}")
            last_expand = ev
            backtracked_to = None

    if outcome is not None and trace:
        expands = sum(ev.action is Action.EXPAND for ev in trace)
        backs = sum(ev.action is Action.BACKTRACK for ev in trace)
        if expands != outcome.expansions:
            problems.append(f"{expands} expand events but expansions={outcome.expansions}")
        if backs != outcome.backtracks:
            problems.append(f"{backs} backtrack events but backtracks={outcome.backtracks}")
        if trace[-1].nodes_generated != outcome.nodes_generated:
            problems.append("final nodes_generated disagrees with outcome")
        if trace[-1].action is not _TERMINAL_FOR_STATUS[outcome.status]:
            problems.append(f"terminal {trace[-1].action.value} for status {outcome.status.value}")
    return problems
