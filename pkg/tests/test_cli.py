from __future__ import annotations

import json
import subprocess
import sys

import pytest

from coverideals.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_ideal_examples(capsys):
    code, out, _ = run(capsys, "ideal", "--graph", "cycle:4", "--cover")
    assert code == 0 and out.startswith("<x1*x3, x2*x4>")
    code, data = run_json(capsys, "ideal", "--graph", "complete:3", "--cover", "--power", "1")
    assert len(data["generators"]) == 3
    code, data = run_json(capsys, "ideal", "--graph", "path:7", "--complement", "--cover")
    assert len(data["generators"]) == 6 and set(data["degrees"]) == {5}


def test_betti_check(capsys):
    code, data = run_json(capsys, "betti", "--graph", "complete:4", "--cover", "--power", "2", "--method", "lq", "--check", "oracle")
    assert code == 0 and data["check"]["agree"]
    assert data["table"]["entries"] == [[0, 6, 10], [1, 7, 12], [2, 8, 3]]


@pytest.mark.parametrize("name,value", [("G", 196), ("H", 195)])
def test_betti_counterexample(capsys, name, value):
    code, out, _ = run(capsys, "betti", "--counterexample", name, "--entry", "2,16", "--jobs", "1")
    assert code == 0 and out.strip() == str(value)


def test_betti_formula_and_preconditions(capsys):
    code, data = run_json(capsys, "betti", "--graph-gj", "cycle:5", "--method", "formula", "--check", "oracle", "--jobs", "1")
    assert code == 0 and data["check"]["agree"]
    code, data = run_json(capsys, "betti", "--graph", "path:5", "--complement", "--power", "2", "--method", "formula", "--check", "lq")
    assert code == 0 and data["check"]["agree"]
    code, _, err = run(capsys, "betti", "--graph", "cycle:5", "--method", "formula")
    assert code == 3 and "no closed form" in err
    # J(C_4) = <x1x3, x2x4>: two disjoint generators never have linear quotients
    code, _, _ = run(capsys, "betti", "--graph", "cycle:4", "--method", "lq")
    assert code == 3


def test_input_errors(capsys):
    assert run(capsys, "betti", "--graph", "bogus:3")[0] == 2
    assert run(capsys, "betti")[0] == 2
    assert run(capsys, "betti", "--graph", "cycle:4", "--field", "4")[0] == 2
    assert run(capsys, "ideal", "--ideal-file", "/nonexistent.json")[0] == 2
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 2


def test_rees_examples(capsys):
    code, data = run_json(capsys, "rees", "--graph-gj", "tree:5")
    assert code == 0 and data["ci"]["verdict"] == "CI" and data["ci"]["mu_K"] == 3
    code, data = run_json(capsys, "rees", "--graph-gj", "cycle:4", "--smax", "3")
    assert len(data["defining_ideal"]["coincidences"]["2"]) == 1
    assert data["linear_type"]["witness_degree"] == 2
    code, data = run_json(capsys, "rees", "--graph-gj", "cycle:5", "--smax", "4")
    assert data["linear_type"]["linear_type"] and data["linear_type"]["witness"] is None
    # J(K_4) is generated in degree 3, not n - 2 = 2
    code, _, err = run(capsys, "rees", "--graph", "complete:4")
    assert code == 3 and "degree n-2" in err


def test_reg_methods_agree(capsys):
    values = set()
    for method in ("lq", "oracle", "formula"):
        code, data = run_json(capsys, "reg", "--graph", "multipartite:2,3", "--power", "2", "--method", method, "--jobs", "1")
        assert code == 0
        values.add(data["reg"])
    assert values == {6}


def test_hilbert(capsys):
    code, data = run_json(capsys, "hilbert", "--graph-gj", "path:4", "--dmax", "4")
    assert data["values"] == [0, 0, 3, 10, 22]
    code, data = run_json(capsys, "hilbert", "--ci-series", "4", "--dmax", "4", "--smax", "1")
    assert [row[1] for row in data["coefficients"]] == [0, 0, 3, 10, 22]


def test_formula(capsys):
    code, data = run_json(capsys, "formula", "reg-multipartite", "w=2,3", "s=2")
    assert data["value"] == 6
    code, data = run_json(capsys, "formula", "complete-power", "n=3", "s=1", "i=1")
    assert data["value"] == 2
    assert run(capsys, "formula", "planar", "n=4")[0] == 2
    assert run(capsys, "formula", "list")[0] == 0


def test_graph_command(capsys):
    code, data = run_json(capsys, "graph", "--graph-gj", "cycle:6")
    assert data["linear_type_verdict"] == "other"
    assert data["structure"]["cyclomatic_number"] == 1


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "chu-vandermonde")
    assert code == 0 and "[PASS] chu-vandermonde" in out
    assert run(capsys, "verify", "nope")[0] == 2


def test_json_is_deterministic():
    cmd = [sys.executable, "-m", "coverideals", "rees", "--graph-gj", "cycle:4", "--smax", "3", "--json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a
