import csv
import io
import json
import subprocess
import sys

import pytest

from petersen_forcing.cli import EXIT_BUDGET, EXIT_OK, EXIT_USAGE, EXIT_VERIFY, RunConfig, UsageError, main, parse_range


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv,lines", [(("gen", "--n", "5", "--k", "2"), 15), (("gen", "--n", "12"), 36)])
def test_gen_line_counts(capsys, argv, lines):
    code, out, _ = run(capsys, *argv)
    assert code == EXIT_OK
    assert len(out.strip().splitlines()) == lines
    assert all(len(line.split()) == 2 for line in out.splitlines())


@pytest.mark.parametrize("argv", [("gen", "--n", "2"), ("gen",), ("polynomial", "--n-range", "9..5"),
                                  ("bogus",), ("gen", "--n", "5", "--k", "5"), ("polynomial", "--n", "9", "--jobs", "0")])
def test_usage_errors(capsys, argv):
    code = None
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    assert code == EXIT_USAGE


def test_polynomial_text(capsys):
    code, out, _ = run(capsys, "polynomial", "--n", "9")
    assert code == EXIT_OK
    assert "type1: x^3+18x^2" in out.splitlines()
    assert "type2: 3x^2" in out.splitlines()


def test_polynomial_n16(capsys):
    _, out, _ = run(capsys, "polynomial", "--n", "16")
    assert "type1: 125x^4+48x^3" in out and "type2: 20x^3" in out


def test_polynomial_csv(capsys):
    _, out, _ = run(capsys, "polynomial", "--n", "10", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "type", "exponent", "coefficient"]
    assert rows[1:] == [["10", "1", "3", "26"], ["10", "2", "3", "10"]]


def test_polynomial_json_and_type_filter(capsys):
    _, out, _ = run(capsys, "polynomial", "--n-range", "8..9", "--format", "json", "--type", "2")
    data = json.loads(out)
    assert [d["n"] for d in data] == [8, 9]
    assert data[1]["type2"] == [[2, 3]] and "type1" not in data[1]


def test_output_is_byte_stable_across_jobs(capsys, monkeypatch):
    _, a, _ = run(capsys, "polynomial", "--n-range", "11..13", "--format", "json")
    _, b, _ = run(capsys, "polynomial", "--n-range", "11..13", "--format", "json", "--jobs", "2")
    monkeypatch.setenv("PMF_JOBS", "2")
    _, c, _ = run(capsys, "polynomial", "--n-range", "11..13", "--format", "json")
    assert a == b == c


def test_bad_pmf_jobs(capsys, monkeypatch):
    monkeypatch.setenv("PMF_JOBS", "many")
    code, _, err = run(capsys, "polynomial", "--n", "9")
    assert code == EXIT_USAGE and "PMF_JOBS" in err


def test_forcing_examples(capsys):
    code, out, _ = run(capsys, "forcing", "--n", "25", "--matching", "CD^4C^2")
    assert code == EXIT_OK and "f=4" in out
    code, out, _ = run(capsys, "forcing", "--n", "9", "--matching", "B^9", "--format", "json")
    rec = json.loads(out)
    assert rec["forcing_number"] == 3 and len(rec["witness"]) == 3 and rec["type"] == 1


def test_forcing_length_error(capsys):
    code, _, err = run(capsys, "forcing", "--n", "25", "--matching", "A^9")
    assert code == EXIT_USAGE
    assert "36" in err and "25" in err


def test_forcing_edge_list(capsys):
    pairs = ",".join(f"{i}-{i + 5}" for i in range(5))
    code, out, _ = run(capsys, "forcing", "--n", "5", "--matching", pairs)
    assert code == EXIT_OK and "type=1" in out
    code, _, err = run(capsys, "forcing", "--n", "5", "--matching", "0-1")
    assert code == EXIT_USAGE


def test_forcing_other_k(capsys):
    pairs = ",".join(f"{i}-{i + 6}" for i in range(6))
    code, out, _ = run(capsys, "forcing", "--n", "6", "--k", "1", "--matching", pairs)
    assert code == EXIT_OK and "type=None" in out


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "8", "--list", "--type", "2")
    lines = out.splitlines()
    assert lines[0] == "n=8 type1=13 type2=4 total=17"
    assert lines[1:] == [f"  type2 DD @{a}" for a in range(4)]


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "table1", "--max-n", "16")
    assert code == EXIT_OK and "fail=0" in out
    code, out, _ = run(capsys, "verify", "spectrum", "--n", "20")
    assert code == EXIT_OK and "{3..5} continuous" in out and "not-claimed" in out


def test_verify_failure_exit_code(capsys):
    # the closed form for D^2 disagrees with the solver at n = 8
    code, out, _ = run(capsys, "verify", "dc", "--n", "8", "--format", "json")
    assert code == EXIT_VERIFY
    assert json.loads(out)[0]["status"] == "fail"


def test_verify_checkpoint_resume(capsys, tmp_path):
    ck = tmp_path / "ck"
    _, first, _ = run(capsys, "verify", "table1", "--n-range", "9..11", "--checkpoint", str(ck))
    assert sorted(p.name for p in ck.iterdir()) == ["poly-n10.json", "poly-n11.json", "poly-n9.json"]
    _, second, _ = run(capsys, "verify", "table1", "--n-range", "9..11", "--checkpoint", str(ck))
    assert first == second


def test_budget_exhaustion_partial_file(capsys, tmp_path):
    out = tmp_path / "poly.json"
    code, _, err = run(capsys, "polynomial", "--n-range", "12..20", "--budget-matchings", "10", "--out", str(out))
    assert code == EXIT_BUDGET and "budget" in err
    data = json.loads(out.read_text())
    assert data["marker"]["partial"] is True
    # n = 12..14 have fewer than 10 dihedral classes
    assert data["marker"]["stopped_at_n"] == 15
    assert [d["n"] for d in data["completed"]] == [12, 13, 14]


def test_verify_budget_exit(capsys):
    code, out, _ = run(capsys, "verify", "table1", "--n", "20", "--budget-matchings", "5")
    assert code == EXIT_BUDGET and "budget" in out


def test_out_file_matches_stdout(capsys, tmp_path):
    path = tmp_path / "g.txt"
    _, out, _ = run(capsys, "gen", "--n", "7")
    run(capsys, "gen", "--n", "7", "--out", str(path))
    assert path.read_text() == out


def test_range_and_config():
    assert parse_range("3..5") == [3, 4, 5]
    for bad in ("5..3", "x", "3-5"):
        with pytest.raises(UsageError):
            parse_range(bad)
    with pytest.raises(UsageError):
        RunConfig(command="gen", ns=[5], jobs=0)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "petersen_forcing.cli", "gen", "--n", "6"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and len(res.stdout.splitlines()) == 18
