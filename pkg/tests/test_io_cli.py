"""JSON file formats and the command-line surface."""

from fractions import Fraction as F
import json

import pytest

from liepencil.exact import RatMatrix, SparsePoly
from liepencil.constructions import build_classical, build_gl_associative
from liepencil.io import (
    ParseError, algebra_to_dict, algebra_from_dict, operator_to_dict,
    operator_from_dict, poly_to_list, poly_from_list, seeds_to_dict,
    seeds_from_dict, save_algebra, load_algebra, save_operator, load_operator,
    save_seeds, load_seeds,
)
from liepencil.cli import main


def sl2():
    return build_classical("sl", 2)


def test_algebra_round_trip(tmp_path):
    t = sl2()
    path = tmp_path / "alg.json"
    save_algebra(t, path, metadata={"family": "sl", "n": 2})
    back, meta = load_algebra(path)
    assert back == t
    assert back.labels == t.labels
    assert meta == {"family": "sl", "n": 2}
    # writing the same document twice is byte-identical
    save_algebra(t, tmp_path / "again.json", metadata={"family": "sl", "n": 2})
    assert (tmp_path / "alg.json").read_bytes() == (tmp_path / "again.json").read_bytes()


def test_algebra_save_refuses_non_skew(tmp_path):
    with pytest.raises(ValueError):
        algebra_to_dict(build_gl_associative(2))


def test_operator_round_trip(tmp_path):
    m = RatMatrix([[F(1, 3), F(0)], [F(-5, 2), F(7)]])
    path = tmp_path / "op.json"
    save_operator(m, path)
    assert load_operator(path) == m
    doc = operator_to_dict(m)
    assert doc["matrix"][0][0] == "1/3"
    assert doc["matrix"][1] == ["-5/2", "7"]


def test_poly_and_seed_round_trip(tmp_path):
    x0 = SparsePoly.variable(3, 0)
    x1 = SparsePoly.variable(3, 1)
    c = x1 * x1 + SparsePoly.const(3, 4) * x0 * SparsePoly.variable(3, 2)
    data = poly_to_list(c)
    assert poly_from_list(3, data) == c
    path = tmp_path / "seeds.json"
    save_seeds([c, x0], path)
    assert load_seeds(path, 3) == [c, x0]


def test_parse_errors():
    t = sl2()
    doc = algebra_to_dict(t)

    missing = dict(doc)
    del missing["dim"]
    with pytest.raises(ParseError):
        algebra_from_dict(missing)

    bad_rat = json.loads(json.dumps(doc))
    bad_rat["brackets"][0]["coeffs"] = {"0": "one"}
    with pytest.raises(ParseError) as exc:
        algebra_from_dict(bad_rat)
    assert "brackets[0]" in str(exc.value)

    bad_index = json.loads(json.dumps(doc))
    bad_index["brackets"][0]["j"] = 99
    with pytest.raises(ParseError):
        algebra_from_dict(bad_index)

    dup = json.loads(json.dumps(doc))
    dup["brackets"].append(dict(dup["brackets"][0]))
    with pytest.raises(ParseError):
        algebra_from_dict(dup)

    short_basis = json.loads(json.dumps(doc))
    short_basis["basis"] = ["a"]
    with pytest.raises(ParseError):
        algebra_from_dict(short_basis)


def test_operator_parse_errors():
    with pytest.raises(ParseError):
        operator_from_dict({"dim": 2, "matrix": [["1", "2"], ["3"]]})
    with pytest.raises(ParseError):
        operator_from_dict({})


def run(args):
    return main(list(args))


@pytest.fixture()
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def test_cli_example_and_classify(workdir, capsys):
    assert run(["example", "sl", "2"]) == 0
    assert run(["example", "grading", "sl", "2", "--weights", "1,0,1", "--modulus", "2"]) == 0
    capsys.readouterr()
    code = run(["classify", "--algebra", "sl2.json",
                "--operator", "sl2-grading-op.json", "--json"])
    out = capsys.readouterr().out
    assert code == 0
    doc = json.loads(out)
    assert doc["tag"] == "near"
    assert (doc["a"], doc["b"]) == ("0", "-2")
    assert doc["mode"] == "semisimple"
    assert doc["degenerate_lines"] == 2
    assert all(doc["jacobi_checks"].values())


def test_cli_pencil_and_index(workdir, capsys):
    run(["example", "sl", "2"])
    run(["example", "grading", "sl", "2", "--weights", "1,0,1", "--modulus", "2"])
    capsys.readouterr()
    assert run(["pencil", "--algebra", "sl2.json",
                "--operator", "sl2-grading-op.json", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["eigenvalues"] == ["0", "-2"]
    assert all(m["lie"] for m in doc["members"])
    assert run(["index", "--algebra", "sl2.json", "--mode", "exact", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert (doc["dim"], doc["rank"], doc["index"]) == (3, 2, 1)


def test_cli_nijenhuis_exit_code(workdir, capsys):
    run(["example", "sl", "2"])
    run(["example", "grading", "sl", "2", "--weights", "1,0,1", "--modulus", "2"])
    capsys.readouterr()
    code = run(["nijenhuis-check", "--algebra", "sl2.json",
                "--operator", "sl2-grading-op.json", "--json"])
    assert code == 1
    doc = json.loads(capsys.readouterr().out)
    assert doc["nijenhuis"] is False
    assert doc["witness"] == [0, 2]


def test_cli_exp_check(workdir, capsys):
    run(["example", "sl", "2"])
    run(["example", "grading", "sl", "2", "--weights", "1,0,1", "--modulus", "2"])
    capsys.readouterr()
    code = run(["exp-check", "--algebra", "sl2.json",
                "--operator", "sl2-grading-op.json",
                "--kind", "near", "--m", "-2", "--points", "2,3", "--json"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["ok"] is True


def test_cli_pc_check(workdir, capsys):
    run(["example", "sl", "2"])
    run(["example", "grading", "sl", "2", "--weights", "1,0,1", "--modulus", "2"])
    capsys.readouterr()
    code = run(["pc-check", "--algebra", "sl2.json",
                "--operator", "sl2-grading-op.json", "--json"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["commutes"] is True
    assert len(doc["generators"]) == 2
    code = run(["pc-check", "--algebra", "sl2.json", "--gamma", "0,0,1", "--json"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["commutes"] is True


def test_cli_report(workdir, capsys):
    assert run(["example", "nilpotent-square", "sl", "2", "--partition", "2"]) == 0
    capsys.readouterr()
    code = run(["report", "--algebra", "sl2.json",
                "--operator", "sl2-nilsquare-op.json", "--json"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert all(c["ok"] for c in doc["checks"])
    assert doc["diagnostics"]["derived_lower_central_series"] == [3, 1, 0]


def test_cli_input_errors(workdir, capsys):
    (workdir / "broken.json").write_text("{not json")
    assert run(["classify", "--algebra", "broken.json",
                "--operator", "broken.json"]) == 2
    run(["example", "sl", "2"])
    run(["example", "sl", "3"])
    run(["example", "grading", "sl", "2", "--weights", "1,0,1", "--modulus", "2"])
    capsys.readouterr()
    # operator dimension does not match the algebra
    assert run(["classify", "--algebra", "sl3.json",
                "--operator", "sl2-grading-op.json"]) == 2


def test_cli_seed_env(workdir, capsys, monkeypatch):
    run(["example", "sl", "2"])
    capsys.readouterr()
    monkeypatch.setenv("LIEPENCIL_SEED", "not-a-number")
    assert run(["index", "--algebra", "sl2.json"]) == 2
    monkeypatch.setenv("LIEPENCIL_SEED", "17")
    assert run(["index", "--algebra", "sl2.json", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["index"] == 1
