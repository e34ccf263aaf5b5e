import subprocess
import sys

import pytest

from dioclimb.cli import main
from dioclimb.search import read_trace_csv


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_625(capsys):
    code, out, err = run(capsys, "solve", "x1^2 + x2^2 = 625")
    assert code == 0
    assert out == "SOLVED x=24 7\n"
    assert err == ""


def test_solve_unsolvable(capsys):
    assert run(capsys, "solve", "x1^2 + x2^2 = 3") == (1, "UNSOLVABLE\n", "")


def test_solve_syntax_error(capsys):
    code, out, err = run(capsys, "solve", "x1^2 + x2 = ")
    assert code == 2
    assert out == ""
    assert "column" in err and len(err.strip().splitlines()) == 1


def test_solve_budget(capsys):
    assert run(capsys, "solve", "x1^2 + x2^2 = 625", "--max-expansions", "3")[:2] == (3, "BUDGET\n")


def test_solve_nonpositive_coefficient(capsys):
    code, out, err = run(capsys, "solve", "0*x1^2 + x2^2 = 100")
    assert (code, out) == (2, "")
    assert "coefficient" in err


def test_bad_budget_flag(capsys):
    with pytest.raises(SystemExit) as info:
        main(["solve", "x1^1 = 1", "--max-expansions", "0"])
    assert info.value.code == 2


def test_equation_source_exclusive(capsys, tmp_path):
    f = tmp_path / "eq.txt"
    f.write_text("x1^2 + x2^2 = 100\n")
    assert run(capsys, "solve", "--file", str(f))[0] == 0
    assert run(capsys, "solve", "x1^1 = 1", "--file", str(f))[0] == 2
    assert run(capsys, "solve")[0] == 2
    assert run(capsys, "solve", "--file", str(tmp_path / "missing.txt"))[0] == 2


def test_solve_trace_and_check(capsys, tmp_path):
    path = tmp_path / "t.csv"
    code, out, err = run(capsys, "solve", "x1^2 + x2^2 = 149", "--trace", str(path), "--check")
    assert code == 0 and out == "SOLVED x=10 7\n" and err == ""
    with open(path) as fh:
        trace = read_trace_csv(fh)
    assert trace[-1].action.value == "goal"


def test_check_skipped_when_oracle_too_large(capsys):
    code, out, err = run(capsys, "solve", " + ".join(f"x{i}^2" for i in range(1, 11)) + " = 956", "--check")
    assert code == 0 and out.startswith("SOLVED")
    assert "skipped" in err


def test_oracle(capsys):
    assert run(capsys, "oracle", "x1^2 + x2^2 = 100") == (0, "6 8\n8 6\n", "")
    assert run(capsys, "oracle", "x1^2 + x2^2 = 3") == (1, "", "")
    assert run(capsys, "oracle", "x1^2 + x2^2 = 100", "--cap", "1")[1] == "6 8\n"


def test_bench(capsys, tmp_path):
    code, out, err = run(capsys, "bench", "table1", "--out", str(tmp_path))
    assert code == 0
    assert "9/9 passed" in out
    assert (tmp_path / "report.csv").exists()
    assert len(list((tmp_path / "traces").glob("*.csv"))) == 9


def test_bench_unknown_suite(capsys):
    with pytest.raises(SystemExit) as info:
        main(["bench", "table9"])
    assert info.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "dioclimb", "solve", "x1^3 + x2^3 = 1008"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "SOLVED x=10 2\n"
