import json

import pytest

from decabracket.scripts.cli import main, parse_cubic
from decabracket.verification.report import CheckOutcome
from decabracket.verification.suites import SUITES, check_json_roundtrip, check_permutation_pattern
from decabracket.polynomials.polynomial import parse_polynomial, x_ring


def run(argv):
    with pytest.raises(SystemExit) as excinfo:
        main(argv)
    return excinfo.value.code


def test_bracket_example(capsys):
    assert run(["bracket", "--f", "x2^3", "--a", "x0^2", "--b", "x1^2"]) == 0
    assert capsys.readouterr().out.strip() == "-2*y_110*y_002 - 2*y_101*y_011"


def test_bracket_from_coefficient_list(capsys):
    assert run(["bracket", "--f", "0,0,0,0,0,0,0,0,0,1", "--a", "2,0,0", "--b", "0,2,0"]) == 0
    assert capsys.readouterr().out.strip() == "-2*y_110*y_002 - 2*y_101*y_011"


def test_bracket_diagonal_is_zero(capsys):
    assert run(["bracket", "--f", "x0^3 + x1^3 + x2^3", "--a", "x0*x1", "--b", "x0*x1"]) == 0
    assert capsys.readouterr().out.strip() == "0"


def test_parse_cubic_forms_agree():
    fermat = parse_polynomial("x0^3 + x1^3 + x2^3", x_ring())
    assert parse_cubic("1,0,0,0,0,0,1,0,0,1") == fermat
    assert parse_cubic("x0^3 + x1^3 + x2^3") == fermat


@pytest.mark.parametrize(
    "argv,flag",
    [
        (["bracket", "--f", "x2^3", "--a", "x0^3", "--b", "x1^2"], "--a"),
        (["bracket", "--f", "x2^3", "--a", "x0^2", "--b", "z^2"], "--b"),
        (["bracket", "--f", "1,2,3", "--a", "x0^2", "--b", "x1^2"], "--f"),
        (["bracket", "--f", "x2^2", "--a", "x0^2", "--b", "x1^2"], "degree 3"),
    ],
)
def test_bracket_usage_errors(capsys, argv, flag):
    assert run(argv) == 2
    assert flag in capsys.readouterr().err


def test_m4_example(capsys):
    argv = ["m4", "--ordering", "efgh", "--alpha=-2,-2,-1", "--a", "2,0,0", "--b", "0,2,0", "--c", "0,0,3"]
    assert run(argv) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == ["closed form: -1 · x^(0,0,2)", "tree sum:    -1 · x^(0,0,2)", "agreement:   true"]


def test_m4_vanishing(capsys):
    argv = ["m4", "--ordering", "fghe", "--alpha=-2,-2,-1", "--a", "2,0,0", "--b", "0,2,0", "--c", "0,0,3"]
    assert run(argv) == 0
    assert capsys.readouterr().out.splitlines()[0] == "closed form: 0"


@pytest.mark.parametrize(
    "ordering,alpha,message",
    [("eefg", "-2,-2,-1", "out of scope"), ("efgh", "-2,0,-1", "--alpha"), ("xyzw", "-2,-2,-1", "unknown ordering")],
)
def test_m4_usage_errors(capsys, ordering, alpha, message):
    argv = ["m4", "--ordering", ordering, f"--alpha={alpha}", "--a", "2,0,0", "--b", "0,2,0", "--c", "0,0,3"]
    assert run(argv) == 2
    assert message in capsys.readouterr().err


@pytest.mark.parametrize(
    "flag,value",
    [("--alpha", "-2,-2"), ("--a", "x3^2"), ("--b", "0,2"), ("--c", "")],
)
def test_m4_parse_errors_name_the_flag(capsys, flag, value):
    values = {"--alpha": "-2,-2,-1", "--a": "2,0,0", "--b": "0,2,0", "--c": "0,0,3"}
    values[flag] = value
    argv = ["m4", "--ordering", "efgh"] + [f"{name}={text}" for name, text in values.items()]
    assert run(argv) == 2
    assert f"{flag}: " in capsys.readouterr().err


def test_tables_json_to_file(tmp_path):
    out = tmp_path / "tables.json"
    assert run(["tables", "--format", "json", "--out", str(out)]) == 0
    data = json.loads(out.read_text(encoding="utf-8"))
    assert len(data["tables"]) == 10


def test_tables_text_to_stdout(capsys):
    assert run(["tables", "--format", "text"]) == 0
    assert "{x0^2, x1^2}_{x2^3} = -2*y_110*y_002 - 2*y_101*y_011" in capsys.readouterr().out


def test_tables_json_is_byte_stable(capsys):
    run(["tables"])
    first = capsys.readouterr().out
    run(["tables"])
    assert capsys.readouterr().out == first


def test_unknown_format_is_a_usage_error():
    assert run(["tables", "--format", "yaml"]) == 2


def test_verify_writes_report(monkeypatch, tmp_path, capsys):
    monkeypatch.setitem(SUITES, "tables", [("permutation_pattern", check_permutation_pattern), ("json_roundtrip", check_json_roundtrip)])
    out = tmp_path / "report.json"
    assert run(["verify", "--suite", "tables", "--out", str(out)]) == 0
    assert "2 checks: 2 passed" in capsys.readouterr().out
    assert json.loads(out.read_text(encoding="utf-8"))["ok"] is True


def test_verify_failure_exit_code(monkeypatch):
    monkeypatch.setitem(SUITES, "tables", [("broken", lambda: CheckOutcome("fail", 1, witness="x"))])
    assert run(["verify", "--suite", "tables"]) == 1


def test_verify_rejects_bad_jobs():
    assert run(["verify", "--jobs", "0"]) == 2
