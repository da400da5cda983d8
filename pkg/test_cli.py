"""End-to-end runs of app.main with captured output."""

import json

import pytest

import app
from backend.lattice.grid_state import validate_state
from backend.lattice.serializer import state_from_dict


def _run(capsys, *argv):
    code = app.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _json(capsys, *argv):
    code, out, _ = _run(capsys, *argv, "--json", "--no-meta")
    return code, json.loads(out)


def _result(payload, name):
    return next(r["value"] for r in payload["results"] if r["name"] == name)


def test_count_methods_agree(capsys):
    values = []
    for method in ("backtrack", "rowdp", "decompose"):
        code, payload = _json(capsys, "count", "-p", "2,2,0", "-m", method)
        assert code == 0
        values.append(_result(payload, "A_lambda"))
    assert len(set(values)) == 1


def test_count_formula_auto(capsys):
    code, payload = _json(capsys, "count", "-p", "0,0,0", "-m", "formula-auto")
    assert code == 0
    assert _result(payload, "A_lambda") == 7
    assert _result(payload, "shape") == "hook"

    code, payload = _json(capsys, "count", "-p", "2,1,0", "-m", "formula-auto")
    assert _result(payload, "A_lambda") == 26
    assert _result(payload, "shape") == "staircase"


def test_count_default_method_and_threads(capsys):
    code, payload = _json(capsys, "count", "-p", "1,1,0,0", "--threads", "2")
    assert code == 0
    assert payload["inputs"]["method"] == "rowdp"


def test_count_errors(capsys):
    code, _, err = _run(capsys, "count", "-p", "2,2,1,0", "-m", "formula-auto")
    assert code == 2
    assert "neither a hook" in err

    code, _, err = _run(capsys, "count", "-p", "2,x")
    assert code == 2
    assert "error:" in err

    code, _, _ = _run(capsys, "count", "-p", "0,0,0,0", "-m", "backtrack", "--budget-nodes", "3")
    assert code == 3


def test_count_warns_when_budget_is_ignored(capsys):
    code, payload = _json(capsys, "count", "-p", "0,0,0,0", "-m", "rowdp", "--budget-nodes", "3")
    assert code == 0
    assert _result(payload, "A_lambda") == 42
    assert any("budget ignored" in w for w in payload["warnings"])

    code, payload = _json(capsys, "count", "-p", "0,0,0", "-m", "backtrack", "--budget-nodes", "1000")
    assert code == 0
    assert payload["warnings"] == []


def test_count_rowdp_capacity(capsys, monkeypatch):
    monkeypatch.setenv("ICECOUNT_ROWDP_MAX_COLS", "2")
    code, _, _ = _run(capsys, "count", "-p", "0,0,0", "-m", "rowdp")
    assert code == 3


def test_usage_error_from_argparse(capsys):
    with pytest.raises(SystemExit) as info:
        app.main(["count"])
    assert info.value.code == 2


def test_verify_reports_checks(capsys):
    code, payload = _json(capsys, "verify", "table1")
    assert code == 0
    assert len(payload["checks"]) == 6
    assert all(c["pass"] for c in payload["checks"])

    code, payload = _json(capsys, "verify", "pathcounts", "--r-max", "3", "--c-max", "2")
    assert code == 0
    assert len(payload["checks"]) == 6


def test_verify_json_is_byte_identical(capsys):
    _, first, _ = _run(capsys, "verify", "lshape", "--n-max", "3", "--m-max", "2", "--json", "--no-meta")
    _, second, _ = _run(capsys, "verify", "lshape", "--n-max", "3", "--m-max", "2", "--json", "--no-meta")
    assert first == second


def test_poly_command(capsys):
    code, payload = _json(capsys, "poly", "--tail", "0", "--n", "2")
    assert code == 0
    assert _result(payload, "A_lambda(n) in lambda1")["text"] == "lambda1 + 2"

    code, payload = _json(capsys, "poly", "--tail", "0,0", "--n", "3")
    assert _result(payload, "degree") == 2
    assert _result(payload, "p(0)") == 7

    code, payload = _json(capsys, "poly", "--tail", "1,0", "--n", "3")
    assert _result(payload, "p(2)") == 26
    assert all(c["pass"] for c in payload["checks"])

    code, _, _ = _run(capsys, "poly", "--tail", "0,0", "--n", "2")
    assert code == 2


def test_render_command(capsys):
    code, payload = _json(capsys, "render", "-p", "0,0,0", "-i", "0")
    assert code == 0
    state = state_from_dict(_result(payload, "state"))
    assert validate_state(state)

    code, out, _ = _run(capsys, "render", "-p", "0", "-i", "0")
    assert code == 0
    assert "  ^\n> + <\n  v" in out

    code, _, err = _run(capsys, "render", "-p", "0,0,0", "-i", "7")
    assert code == 2
    assert "out of range" in err


def test_table_command(capsys):
    code, out, _ = _run(capsys, "table", "rm", "--m-max", "2", "--format", "csv")
    assert code == 0
    assert "(n + 1)/2" in out
    assert "(n**3 + 6*n**2 + 3*n + 2)/(4*(2*n + 1))" in out

    code, payload = _json(capsys, "table", "totals", "--n-max", "4")
    rows = _result(payload, "totals")
    assert [r["A(n)"] for r in rows] == [1, 2, 7, 42]
    assert [r["A_V(2n+1)"] for r in rows] == [1, 3, 26, 646]
