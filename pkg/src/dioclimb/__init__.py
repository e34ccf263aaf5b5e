"""Steepest-ascent hill climbing for positive-integer solutions of
``a1*x1^p1 + ... + an*xn^pn = N``, with an exhaustive oracle and benchmark suites."""

from .equation import (
    Assignment,
    Equation,
    evaluate,
    heuristic,
    is_solution,
    make_equation,
    parse_equation,
    render,
    variable_upper_bound,
)
from .errors import *  # noqa: F401,F403
from .oracle import CertificationReport, SolutionSet, Verdict, certify, enumerate_solutions
from .search import (
    Action,
    Frontier,
    Node,
    SearchConfig,
    SearchOutcome,
    SearchStatus,
    TraceEvent,
    audit_trace,
    climb,
    frontier_pop,
    initial_node,
    successors,
)
from .bench import BenchCase, BenchReport, builtin_suites, run_suite

__version__ = "0.1.0"
