import pytest

from dioclimb.bench import (
    ORACLE_INFEASIBLE,
    BenchCase,
    builtin_suites,
    report_to_csv,
    report_to_text,
    run_suite,
    suite_cases,
    write_report,
)
from dioclimb.equation import evaluate, make_equation, parse_equation
from dioclimb.errors import DiophantineError
from dioclimb.oracle import enumerate_solutions
from dioclimb.search import SearchConfig, read_trace_csv


def test_suite_sizes():
    suites = builtin_suites()
    assert {k: len(v) for k, v in suites.items()} == {"table1": 9, "table2": 9, "example100": 1}
    assert len(suite_cases("all")) == 19
    with pytest.raises(KeyError):
        suite_cases("table3")


def test_table1_row3():
    case = builtin_suites()["table1"][2]
    assert case.equation == parse_equation("x1^4 + x2^4 = 1921")
    assert case.expected_solution == (6, 5)


def test_table2_row9():
    case = builtin_suites()["table2"][8]
    assert case.equation == make_equation([1] * 10, [2] * 10, 956)
    assert case.expected_solution == (30, 2, 1, 1, 1, 1, 2, 2, 2, 6)


def test_table2_row6_padded():
    case = builtin_suites()["table2"][5]
    assert case.equation.n == 7
    assert case.expected_solution == (21, 2, 1, 1, 1, 1, 1)
    assert evaluate(case.equation, case.expected_solution) == 450


def test_every_listed_solution_checks_out():
    for cases in builtin_suites().values():
        for case in cases:
            if case.expected_solution is not None:
                assert evaluate(case.equation, case.expected_solution) == case.equation.target


def test_example100_solution_set():
    (case,) = builtin_suites()["example100"]
    assert enumerate_solutions(case.equation).solutions == ((6, 8), (8, 6))


def test_bad_listed_solution_rejected():
    with pytest.raises(DiophantineError):
        BenchCase("bad", parse_equation("x1^2 + x2^2 = 100"), (5, 5))


@pytest.mark.parametrize("name", ["table1", "table2"])
def test_run_tables(name):
    report = run_suite(suite_cases(name))
    assert report.summary["solved"] == 9
    assert report.all_passed
    for row in report.rows:
        assert row.verified


def test_oracle_infeasible_rows_still_verified():
    report = run_suite(suite_cases("table2"))
    infeasible = [r for r in report.rows if r.oracle_verdict == ORACLE_INFEASIBLE]
    assert infeasible
    assert all(r.verified and r.passed for r in infeasible)


def test_example100_trace_ends_in_goal(tmp_path):
    report = run_suite(suite_cases("example100"), trace_dir=str(tmp_path))
    with open(tmp_path / "example100.csv") as fh:
        trace = read_trace_csv(fh)
    assert trace[-1].action.value == "goal"
    assert report.rows[0].solution in {(6, 8), (8, 6)}


def test_failing_case_is_recorded_not_raised():
    cases = [BenchCase("neg", make_equation([1, -1], [2, 2], 10)), *suite_cases("example100")]
    report = run_suite(cases)
    assert [r.status for r in report.rows] == ["error", "solved"]
    assert report.summary["errors"] == 1
    assert not report.all_passed


def test_budget_failure_is_not_a_pass():
    report = run_suite(suite_cases("example100"), SearchConfig(max_expansions=2))
    assert report.rows[0].status == "budget"
    assert report.rows[0].oracle_verdict == "inconclusive"
    assert not report.all_passed


def test_run_suite_rejects_empty():
    with pytest.raises(ValueError):
        run_suite([])


def test_report_formats(tmp_path):
    report = run_suite(suite_cases("all"))
    csv_text = report_to_csv(report)
    lines = csv_text.splitlines()
    assert lines[0].startswith("label,equation,status,solution")
    assert len(lines) == 20
    assert lines[1] == "table1-1,x1^2 + x2^2 = 625,solved,24 7,true,29,58,0,agree,true,24 7,29"
    assert "wall_time_s" in report_to_csv(report, include_timing=True)
    text = report_to_text(report)
    assert "19/19 passed" in text
    write_report(report, str(tmp_path))
    assert (tmp_path / "report.csv").read_text() == csv_text
    s = report.summary
    assert s["cases"] == len(report.rows) == s["solved"] + s["unsolvable"] + s["budget"] + s["errors"]


def test_parallel_matches_sequential():
    cases = suite_cases("all")
    assert report_to_csv(run_suite(cases, workers=4)) == report_to_csv(run_suite(cases))
