"""End-to-end tests of the command line interface."""

import json

import pytest

from sparsefeas.cli import run


def _run(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_parse_round_trip(capsys):
    code, payload = _run(capsys, "parse", "--expr", "x1 + 1 + x1")
    assert code == 0
    assert payload["n"] == 1
    assert payload["text"] == "1 + 2*x1"


def test_parse_error_exit_code(capsys):
    code = run(["parse", "--expr", "1 + + x1"])
    assert code == 1


def test_usage_error_exit_code():
    assert run(["feas", "--set", "bogus", "--expr", "1 + x1"]) == 2
    assert run(["no-such-command"]) == 2


def test_feas_positive_singular(capsys):
    code, payload = _run(
        capsys, "feas", "--set", "positive", "--expr", "x1^2 - 2*x1 + 1"
    )
    assert code == 0
    assert payload["classification"] == "SINGULAR_POINT"
    assert payload["witness"] == "1"


def test_feas_positive_empty(capsys):
    code, payload = _run(capsys, "feas", "--set", "positive", "--expr", "1 + x1 + x1^3")
    assert code == 0
    assert payload["classification"] == "EMPTY"


def test_feas_real_verdicts(capsys):
    code, payload = _run(capsys, "feas", "--set", "real", "--expr", "x1^2 - 4")
    assert code == 0
    assert payload["verdict"] == "nonempty"
    code, payload = _run(capsys, "feas", "--set", "nonzero", "--expr", "1 + x1^2")
    assert code == 0
    assert payload["verdict"] == "empty"


def test_disc_vanish_and_sign(capsys):
    code, payload = _run(
        capsys, "disc", "vanish", "--support", "0;1;2", "--coeffs", "1,-2,1"
    )
    assert code == 0
    assert payload["vanish"] is True
    code, payload = _run(
        capsys, "disc", "sign", "--support", "0;1;2", "--coeffs", "1,-3,1"
    )
    assert code == 0
    assert payload["sign"] == 1


def test_disc_sign_bivariate(capsys):
    code, payload = _run(
        capsys,
        "disc",
        "sign",
        "--support",
        "0,0;4,0;0,4;1,1",
        "--coeffs",
        "1,1,1,-3",
    )
    assert code == 0
    assert payload["sign"] in (-1, 1)


def test_topology(capsys):
    code, payload = _run(
        capsys, "topology", "--expr", "1 + x1^4 + x2^4 - 3*x1*x2"
    )
    assert code == 0
    assert payload["classification"] == "COMPACT_SPHERE"
    assert payload["bounds"] == {"N_comp": 1, "N_non": 2}


def test_reduce_sat3_with_brute_force(tmp_path, capsys):
    cnf = tmp_path / "phi.cnf"
    cnf.write_text(
        "c tiny unsatisfiable formula\n"
        "p cnf 1 2\n"
        "1 1 1 0\n"
        "-1 -1 -1 0\n"
    )
    code, payload = _run(
        capsys, "reduce", "sat3", "--dimacs", str(cnf), "--brute-force"
    )
    assert code == 0
    assert payload["satisfiable"] is False
    assert payload["polynomials"]


def test_reduce_sat3_satisfiable(tmp_path, capsys):
    cnf = tmp_path / "phi.cnf"
    cnf.write_text("p cnf 2 1\n1 -2 2 0\n")
    code, payload = _run(
        capsys, "reduce", "sat3", "--dimacs", str(cnf), "--brute-force"
    )
    assert code == 0
    assert payload["satisfiable"] is True


def test_reduce_shor(tmp_path, capsys):
    src = tmp_path / "system.json"
    src.write_text(json.dumps({
        "n": 2,
        "polynomials": [
            {"n": 2, "terms": [{"c": "1", "a": [0, 1]}, {"c": "-1", "a": [7, 0]}]}
        ],
    }))
    code, payload = _run(capsys, "reduce", "shor", "--file", str(src))
    assert code == 0
    for poly in payload["polynomials"]:
        assert len(poly["terms"]) <= 3
        for t in poly["terms"]:
            assert sum(abs(e) for e in t["a"]) <= 2


def test_reduce_sos(tmp_path, capsys):
    src = tmp_path / "system.json"
    src.write_text(json.dumps({
        "n": 1,
        "polynomials": [
            {"n": 1, "terms": [{"c": "1", "a": [1]}, {"c": "-1", "a": [0]}]},
            {"n": 1, "terms": [{"c": "1", "a": [1]}, {"c": "1", "a": [0]}]},
        ],
    }))
    code, payload = _run(capsys, "reduce", "sos", "--file", str(src))
    assert code == 0
    # (x-1)^2 + (x+1)^2 = 2 + 2x^2
    assert payload["terms"] == [{"c": "2", "a": [0]}, {"c": "2", "a": [2]}]


def test_oracle_sturm(capsys):
    code, payload = _run(
        capsys, "oracle", "sturm", "--expr", "x1^2 - 3*x1 + 2",
        "--lower", "0", "--upper", "10",
    )
    assert code == 0
    assert payload["count"] == 2


def test_oracle_grid(capsys):
    code, payload = _run(
        capsys, "oracle", "grid", "--expr", "x1*x2 - x1 - x2 + 1",
        "--box", "0,3;0,3", "--resolution", "1/4",
    )
    assert code == 0
    assert "zero" in payload["certificate"] or "sign_change" in payload["certificate"]


def test_oracle_product(capsys):
    code, payload = _run(
        capsys, "oracle", "product",
        "--alphas", "2", "--betas", "3", "--us", "2", "--vs", "1",
    )
    assert code == 0
    assert payload["sign"] == 1


def test_missing_file_exit_code():
    assert run(["feas", "--set", "positive", "--file", "/nonexistent.json"]) == 1
