"""Command-line behavior: exit codes, formats, reproducibility."""

import json
from pathlib import Path

import pytest

from spinlrl import cli, clifford


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- exit code contract ----------------------------------------------------------


def test_verify_passes_with_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--d", "2", "--suite", "d3")
    # no d3 checks apply at d=2: empty report, still success
    assert code == 0


def test_verify_core_d2(capsys):
    code, out, _ = run(capsys, "verify", "--d", "2", "--suite", "core", "--no-timing")
    assert code == 0
    assert "0 failed" in out


def test_oracle_failure_exits_one(capsys):
    code, out, _ = run(capsys, "oracle", "--d", "2", "[x1,p1]", "0")
    assert code == 1
    assert "witness" in out


def test_oracle_confirmation_exits_zero(capsys):
    code, out, _ = run(capsys, "oracle", "--d", "2", "[x1,p2]", "0", "--trials", "5")
    assert code == 0
    assert "confirmed" in out


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "--suite", "bogus"])
    assert exc.value.code == 2

    code, _, err = run(capsys, "verify", "--d", "9")
    assert code == 2 and "--big-d" in err

    code, _, err = run(capsys, "verify", "--d", "abc")
    assert code == 2

    code, _, err = run(capsys, "reduce", "--d", "2", "[x1")
    assert code == 2


def test_io_error_exits_three(capsys, tmp_path):
    blocker = tmp_path / "not_a_dir"
    blocker.write_text("occupied")
    target = blocker / "out.txt"
    code, _, err = run(capsys, "reduce", "--d", "2", "x1", "--output", str(target))
    assert code == 3
    assert "cannot write" in err


# -- reduce ------------------------------------------------------------------------


def test_reduce_identity_to_zero(capsys):
    code, out, _ = run(capsys, "reduce", "--d", "2", "[A(1),M(1)] - i*T")
    assert code == 0 and out.strip() == "0"


def test_reduce_casimir_constant(capsys):
    code, out, _ = run(capsys, "reduce", "--d", "3", "Q2")
    assert code == 0 and out.strip() == "-5/4"


def test_reduce_coupling_square(capsys):
    code, out, _ = run(capsys, "reduce", "--d", "3", "(g1 x1 + g2 x2 + g3 x3)^2")
    assert code == 0 and out.strip() == "x1^2 + x2^2 + x3^2"


def test_reduce_adjoint_flag(capsys):
    code, out, _ = run(capsys, "reduce", "--d", "2", "x1 p1", "--adjoint")
    assert code == 0 and out.strip() == "x1 p1 + (-i)"


def test_reduce_substitution(capsys):
    code, out, _ = run(capsys, "reduce", "--d", "2", "(1-2E) x1", "--sub", "E=1/2")
    assert code == 0 and out.strip() == "0"
    code, out, _ = run(capsys, "reduce", "--d", "2", "alpha^2", "--sub", "alpha=3")
    assert code == 0 and out.strip() == "9"


def test_reduce_substitution_rejects_non_scalar(capsys):
    code, _, err = run(capsys, "reduce", "--d", "2", "x1", "--sub", "alpha=x1")
    assert code == 2 and "scalar" in err


# -- verify output formats ------------------------------------------------------------


def test_verify_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "--d", "3", "--suite", "d3", "--format", "json", "--no-timing")
    assert code == 0
    payload = json.loads(out)
    assert payload["d"] == 3 and payload["summary"]["failed"] == 0


def test_verify_range_emits_sections(capsys):
    code, out, _ = run(capsys, "verify", "--d", "2..4", "--suite", "d3", "--format", "json", "--no-timing")
    assert code == 0
    payload = json.loads(out)
    assert isinstance(payload, list) and [p["d"] for p in payload] == [2, 3, 4]


def test_verify_output_reproducible(capsys, tmp_path):
    first = tmp_path / "a.json"
    second = tmp_path / "b.json"
    assert run(capsys, "verify", "--d", "3", "--suite", "d3", "--format", "json", "--no-timing", "--output", str(first))[0] == 0
    assert run(capsys, "verify", "--d", "3", "--suite", "d3", "--format", "json", "--no-timing", "--output", str(second))[0] == 0
    assert first.read_bytes() == second.read_bytes()


def test_output_dir_env(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("SPINLRL_OUTPUT_DIR", str(tmp_path))
    code, _, _ = run(capsys, "reduce", "--d", "2", "x1", "--output", "sub/result.txt")
    assert code == 0
    assert (tmp_path / "sub" / "result.txt").read_text().strip() == "x1"


# -- matrices ---------------------------------------------------------------------------


def test_matrices_d2(capsys):
    code, out, _ = run(capsys, "matrices", "--d", "2")
    assert code == 0
    assert out.startswith("gamma 2 1\n0 1\n1 0\n")
    assert "spin 2 1 2" in out


def test_matrices_match_golden_fixture(capsys):
    golden = Path(clifford.__file__).parent / "data" / "gamma_fixtures.txt"
    code, out, _ = run(capsys, "matrices", "--d", "2..5")
    assert code == 0
    assert out == golden.read_text()


def test_matrices_d6_allowed_without_flag(capsys):
    code, out, _ = run(capsys, "matrices", "--d", "6")
    assert code == 0
    assert out.startswith("gamma 6 1")


# -- list -------------------------------------------------------------------------------


def test_list_catalog(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0
    assert "GAMMA-CLIFF" in out and "APP-C-14" in out


def test_list_json(capsys):
    code, out, _ = run(capsys, "list", "--suite", "d3", "--format", "json")
    assert code == 0
    entries = json.loads(out)
    assert {e["id"] for e in entries} >= {"JB-DOT", "JA-DOT"}


# -- oracle options ----------------------------------------------------------------------


def test_oracle_seeded_deterministic(capsys):
    args = ("oracle", "--d", "3", "--trials", "5", "--seed", "7", "[J(1,2),H]", "0")
    first = run(capsys, *args)
    second = run(capsys, *args)
    assert first == second and first[0] == 0


def test_oracle_json_witness(capsys):
    code, out, _ = run(capsys, "oracle", "--d", "2", "[x1,p1]", "0", "--format", "json")
    assert code == 1
    payload = json.loads(out)
    assert payload["confirmed"] is False
    assert payload["oracleWitness"]["imageB"] == "0"
