import io
import itertools

import pytest
from hypothesis import given, settings, strategies as st

from dioclimb.equation import evaluate, make_equation
from dioclimb.errors import BoundsTooLargeError, NonPositiveCoefficientError
from dioclimb.oracle import Verdict, certify, enumerate_solutions, read_solutions_csv
from dioclimb.search import SearchConfig, SearchOutcome, SearchStatus, climb


def sq(n, target):
    return make_equation([1] * n, [2] * n, target)


def brute(eq, limit):
    return sorted(x for x in itertools.product(range(1, limit + 1), repeat=eq.n) if evaluate(eq, x) == eq.target)


def test_enumerate_examples():
    assert brute(sq(2, 100), 9) == [(6, 8), (8, 6)]
    assert enumerate_solutions(sq(2, 100)).solutions == ((6, 8), (8, 6))
    assert brute(sq(2, 149), 12) == [(7, 10), (10, 7)]
    assert enumerate_solutions(sq(2, 149)).solutions == ((7, 10), (10, 7))
    assert enumerate_solutions(sq(2, 3)).solutions == ()


def test_enumerate_records_bounds():
    assert enumerate_solutions(sq(2, 100)).search_bounds == (9, 9)


def test_enumerate_single_variable():
    assert enumerate_solutions(make_equation([3], [2], 27)).solutions == ((3,),)
    assert enumerate_solutions(make_equation([3], [2], 28)).solutions == ()


def test_enumerate_initial_overshoot():
    assert not enumerate_solutions(make_equation([4, 4], [1, 1], 7))


def test_cap():
    eq = make_equation([1, 1, 1], [1, 1, 1], 10)
    full = enumerate_solutions(eq)
    assert len(full) == 36  # C(9, 2) compositions of 10 into 3 parts
    assert enumerate_solutions(eq, cap=4).solutions == full.solutions[:4]
    with pytest.raises(ValueError):
        enumerate_solutions(eq, cap=0)


def test_errors():
    with pytest.raises(NonPositiveCoefficientError):
        enumerate_solutions(make_equation([1, 0], [1, 1], 5))
    with pytest.raises(BoundsTooLargeError):
        enumerate_solutions(sq(10, 956))
    with pytest.raises(BoundsTooLargeError):
        enumerate_solutions(sq(2, 100), volume_ceiling=80)


def test_csv_roundtrip():
    s = enumerate_solutions(sq(2, 100))
    assert s.to_csv() == "6 8\n8 6\n"
    assert read_solutions_csv(io.StringIO(s.to_csv())) == list(s.solutions)


@st.composite
def small_equations(draw):
    n = draw(st.integers(1, 3))
    return make_equation(
        draw(st.lists(st.integers(1, 4), min_size=n, max_size=n)),
        draw(st.lists(st.integers(1, 3), min_size=n, max_size=n)),
        draw(st.integers(1, 30)),
    )


@settings(max_examples=200, deadline=None)
@given(small_equations())
def test_matches_bruteforce(eq):
    sols = enumerate_solutions(eq)
    assert list(sols.solutions) == brute(eq, eq.target)
    assert sorted(set(sols.solutions)) == list(sols.solutions)
    assert bool(enumerate_solutions(eq, cap=1)) == bool(sols)


def _outcome(status, solution=None):
    return SearchOutcome(status, solution, 0, 0, 0)


def test_certify_examples():
    assert certify(sq(2, 625), _outcome(SearchStatus.SOLVED, (24, 7))).verdict is Verdict.AGREE
    assert certify(sq(2, 3), _outcome(SearchStatus.UNSOLVABLE)).verdict is Verdict.AGREE
    report = certify(sq(2, 100), _outcome(SearchStatus.SOLVED, (5, 5)))
    assert report.verdict is Verdict.CLIMBER_FALSE_POSITIVE
    assert "50" in report.detail


def test_certify_missed_and_inconclusive():
    assert certify(sq(2, 100), _outcome(SearchStatus.UNSOLVABLE)).verdict is Verdict.CLIMBER_MISSED_SOLUTION
    assert certify(sq(2, 100), _outcome(SearchStatus.BUDGET_EXCEEDED)).verdict is Verdict.INCONCLUSIVE


def test_certify_real_climbs():
    for target in (100, 149, 625, 3, 50, 99):
        eq = sq(2, target)
        assert certify(eq, climb(eq, SearchConfig(trace_enabled=False))).verdict is Verdict.AGREE
