import json

import pytest

from pseudoboolean import FunctionTable, Point, apply_sequence, delta, parse_expression, parse_ops
from pseudoboolean import sweep
from pseudoboolean.cli import main
from pseudoboolean.io import profile_to_json
from pseudoboolean.families import parity
from pseudoboolean.reconstruction import profile_of


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0
    return json.loads(out)


@pytest.fixture
def example_table(tmp_path):
    path = tmp_path / "f.txt"
    path.write_text("2\n1 2 4 3\n")
    return str(path)


def test_analyze_expression(capsys):
    rep = run_json(capsys, "analyze", "--expr", "x1 - x1*x2 + x2*x3")
    assert rep["degree"] == 2 and rep["monotone"] is False
    assert rep["permutability"]["max_p"] >= 2
    assert rep["boolean"] is True and rep["essential_variables"] == [1, 2, 3]
    assert rep["decomposition"] is None and rep["symmetric"] is None


def test_analyze_table(capsys, example_table):
    rep = run_json(capsys, "analyze", "--table", example_table)
    assert rep["degree"] == 1 and rep["permutability"]["max_p"] == 2
    assert [s["kind"] for s in rep["forbidden_sections"]] == ["sign-change"]
    code, out, _ = run(capsys, "analyze", "--table", example_table)
    assert code == 0 and "local monotonicity degree: 1" in out


def test_analyze_constant(capsys):
    rep = run_json(capsys, "analyze", "--expr", "0", "--arity", "2")
    assert rep["degree"] == 2 and rep["monotone"] is True
    assert rep["decomposition"]["min"] == "0"


def test_report_witness_reverifies(capsys):
    rep = run_json(capsys, "analyze", "--expr", "x1 - x1*x2 + x2*x3")
    w = rep["witness"]
    f = FunctionTable.from_function(3, lambda x: x[0] - x[0] * x[1] + x[1] * x[2])
    d = delta(f, w["k"])
    assert str(d(*w["x"])) == w["delta_x"] and str(d(*w["y"])) == w["delta_y"]
    ce = run_json(capsys, "permute", "--expr", "x1 + x2 - 2*x1*x2", "--p", "2")["counterexample"]
    g = FunctionTable([0, 1, 1, 0])
    x = Point.of(*ce["point"])
    assert str(apply_sequence(g, parse_ops(ce["first"]))[x.bits]) == ce["first_value"]
    assert str(apply_sequence(g, parse_ops(ce["second"]))[x.bits]) == ce["second_value"]


def test_report_json_round_trips(capsys):
    rep = run_json(capsys, "analyze", "--seq", "0,0,1,1,0,0,1,1")
    assert json.loads(json.dumps(rep)) == rep
    assert rep["symmetric"] == "0,0,1,1,0,0,1,1"
    assert parse_expression(rep["polynomial"], arity=7) is not None


def test_derive(capsys, example_table):
    out = run_json(capsys, "derive", "--table", example_table, "--op", "v2 ^1")
    assert out["values"] == ["3"] * 4
    out = run_json(capsys, "derive", "--expr", "x1 - x1*x2 + x2*x3", "--op", "d2")
    assert out["polynomial"] == "-x1 + x3"


def test_sections(capsys):
    out = run_json(capsys, "sections", "--expr", "x1 - x1*x2 + x2*x3", "--p", "2")
    assert len(out["sections"]) == 6
    assert {"vars": [1, 2], "base": [0, 0, 1], "values": ["0", "1", "1", "1"], "monotone": True} \
        in out["sections"]


def test_permute(capsys, example_table):
    assert run_json(capsys, "permute", "--table", example_table, "--p", "2")["permutable"] is True
    assert run_json(capsys, "permute", "--table", example_table, "--p", "2", "--brute")["permutable"]
    assert run_json(capsys, "permute", "--expr", "x1 + x2 - 2*x1*x2", "--max")["max_p"] == 1


def test_reconstruct(capsys, tmp_path):
    p1 = tmp_path / "p1.json"
    p1.write_text(json.dumps(profile_to_json(profile_of(FunctionTable([1, 2, 4, 3])))))
    out = run_json(capsys, "reconstruct", "--profile", str(p1))
    assert out["kind"] == "unique" and out["tables"][0]["values"] == ["1", "2", "4", "3"]
    p2 = tmp_path / "p2.json"
    p2.write_text(json.dumps(profile_to_json(profile_of(parity(3)))))
    out = run_json(capsys, "reconstruct", "--profile", str(p2))
    assert out["kind"] == "parity-pair" and len(out["tables"]) == 2
    prof = profile_to_json(profile_of(FunctionTable([1, 2, 4, 3])))
    prof["meet"][0], prof["join"][0] = prof["join"][0], prof["meet"][0]
    p3 = tmp_path / "p3.json"
    p3.write_text(json.dumps(prof))
    out = run_json(capsys, "reconstruct", "--profile", str(p3))
    assert out["kind"] == "inconsistent" and out["reason"] == "invariant"


def test_symmetric(capsys):
    out = run_json(capsys, "symmetric", "--seq", "0,0,1,1,0,0,1,1")
    assert out["degree"] == 2 and out["permutability_degree"] == 2
    assert out["meet"] == "0,0,1,0,0,0,1" and out["join"] == "0,1,1,1,0,1,1"
    code, _, err = run(capsys, "symmetric", "--expr", "x1 - x1*x2 + x2*x3")
    assert code == 2 and "not symmetric" in err


def test_game(capsys, example_table):
    assert run_json(capsys, "game", "worth", "--table", example_table, "--coalition", "2")["worth"] == "4"
    out = run_json(capsys, "game", "contrib", "--expr", "x1 - x1*x2 + x2*x3",
                   "--coalition", "1", "--player", "2")
    assert out["contribution"] == "-1"
    out = run_json(capsys, "game", "outcome", "--table", example_table, "--order", "1:mal,2:ben")
    assert out["outcome"] == "3" and (out["least"], out["greatest"]) == ("3", "3")


def test_decompose(capsys, example_table):
    out = run_json(capsys, "decompose", "--expr", "x1*x2")
    assert out["coefficients"] == {"{}": "0", "{1}": "0", "{2}": "0", "{1,2}": "1"}
    assert run_json(capsys, "decompose", "--table", example_table) == {"monotone": False}


@pytest.mark.parametrize("argv", [
    ["analyze", "--expr", "x1 +* x2"],
    ["analyze", "--expr", "x21"],
    ["analyze", "--table", "/nonexistent/f.txt"],
    ["derive", "--expr", "x1", "--op", "q1"],
    ["sweep", "--claims", "no-such-claim"],
    ["sweep", "--max-arity", "5"],
    ["analyze"],
])
def test_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["analyze", "--expr", "x1", "--table", "f.txt"])
    assert exc.value.code == 2


def test_parse_error_reports_position(capsys):
    _, _, err = run(capsys, "analyze", "--expr", "x1 +* x2")
    assert "position 4" in err


def test_sweep_small(capsys):
    out = run_json(capsys, "sweep", "--claims", "binary-nonmonotone-census,boolean-2local-iff-2permutable",
                   "--max-arity", "3", "--samples", "20")
    assert [r["claim"] for r in out] == ["binary-nonmonotone-census", "boolean-2local-iff-2permutable"]
    assert all(r["ok"] for r in out)
    code, out, _ = run(capsys, "sweep", "--list")
    assert code == 0 and "reconstruction-roundtrip" in out


def test_sweep_counterexample_exits_1(capsys, monkeypatch):
    def broken(config):
        r = sweep.SweepResult("always-fails", "one function", total=1, passed=0)
        r.counterexample = {"arity": 0, "values": ["0"]}
        return r

    monkeypatch.setitem(sweep.CLAIMS, "always-fails", ("a claim that fails", broken))
    code, out, _ = run(capsys, "sweep", "--claims", "always-fails")
    assert code == 1 and "FAIL always-fails" in out
