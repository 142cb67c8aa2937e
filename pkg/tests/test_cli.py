import json

import pytest

from abct.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_class_text(capsys):
    code, out, _ = call(capsys, "class", "--n", "7")
    assert code == 0
    assert out.strip() == "11*s[2] + 6*s[1,1]"


def test_class_json_schema(capsys):
    code, out, _ = call(capsys, "class", "--n", "8", "--json")
    data = json.loads(out)
    assert code == 0
    assert set(data) == {"n", "codim", "terms"}
    assert data["terms"][0] == {"partition": [3], "coeff": "26"}
    assert all(isinstance(t["coeff"], str) for t in data["terms"])


def test_class_time_flag(capsys):
    code, out, err = call(capsys, "class", "--n", "20", "--time")
    assert code == 0 and "time:" in err


@pytest.mark.parametrize("argv, flag", [
    (["class", "--n", "4"], "--n"),
    (["degree", "--n", "3"], "--n"),
    (["verify-class", "--max-n", "2"], "--max-n"),
    (["verify-geometry", "--n", "3", "--d", "3"], "--d"),
    (["groebner-check", "--cols", "2"], "--cols"),
])
def test_usage_errors_name_the_flag(capsys, argv, flag):
    code, _, err = call(capsys, *argv)
    assert code == 2
    assert flag in err


def test_argparse_errors_exit_2(capsys):
    assert call(capsys, "class")[0] == 2
    assert call(capsys, "nonsense")[0] == 2
    assert call(capsys, "strata-dim", "--preset", "bogus")[0] == 2


def test_degree(capsys):
    code, out, _ = call(capsys, "degree", "--n", "6")
    assert (code, out.strip()) == (0, "168")
    code, out, _ = call(capsys, "degree", "--n", "8", "--oracle", "--json")
    data = json.loads(out)
    assert data == {"n": 8, "degree": "84744", "oracle": "84744", "agree": True}


def test_euler(capsys):
    code, out, _ = call(capsys, "euler", "--n", "10", "--json")
    assert code == 0
    assert json.loads(out) == {
        "n": 10, "coeff": "120", "closed_form": "120", "eulerian": "120", "all_equal": True
    }


def test_verify_class(capsys):
    code, out, _ = call(capsys, "verify-class", "--max-n", "10")
    assert code == 0
    assert out.count("ok") == 12


def test_verify_geometry(capsys):
    code, out, _ = call(capsys, "verify-geometry", "--n", "7", "--d", "3", "--seed", "5", "--trials", "10")
    assert code == 0 and out.startswith("ok")
    code, out, _ = call(capsys, "verify-geometry", "--n", "7", "--seed", "5", "--trials", "3", "--json")
    assert json.loads(out)["passed"] is True


def test_verify_geometry_deterministic(capsys):
    first = call(capsys, "verify-geometry", "--n", "6", "--seed", "9", "--trials", "4", "--json")
    second = call(capsys, "verify-geometry", "--n", "6", "--seed", "9", "--trials", "4", "--json")
    assert first == second


def test_matroid_image(tmp_path, capsys):
    f = tmp_path / "m.json"
    f.write_text(json.dumps({"n": 4, "bases": [[2, 3], [2, 4], [3, 4]]}))
    code, out, _ = call(capsys, "matroid-image", "--file", str(f), "--d", "2")
    assert (code, out.strip()) == (0, "{2,3,4}")
    code, out, _ = call(capsys, "matroid-image", "--file", str(f), "--d", "2", "--json")
    data = json.loads(out)
    assert data["bases"] == [[2, 3, 4]] and data["is_matroid"]
    f.write_text(json.dumps({"n": 3, "bases": [[1, 2], [1, 3]]}))
    code, out, _ = call(capsys, "matroid-image", "--file", str(f))
    assert (code, out.strip()) == (0, "empty")


def test_matroid_image_bad_file(tmp_path, capsys):
    f = tmp_path / "bad.json"
    f.write_text(json.dumps({"n": 4, "bases": [[1, 2], [3, 4]]}))
    code, _, err = call(capsys, "matroid-image", "--file", str(f))
    assert code == 2 and "--file" in err
    code, _, err = call(capsys, "matroid-image", "--file", str(tmp_path / "missing.json"))
    assert code == 2


def test_enumerate(capsys):
    code, out, _ = call(capsys, "enumerate-matroids", "--n", "3")
    assert code == 0
    assert out.strip().splitlines()[-1] == "count: 7"
    code, out, _ = call(capsys, "enumerate-matroids", "--n", "4", "--json")
    assert json.loads(out)["count"] == 36


@pytest.mark.parametrize("preset, dim", [("uniform", "8"), ("m1", "6"), ("m2", "4")])
def test_strata_dim(capsys, preset, dim):
    code, out, _ = call(capsys, "strata-dim", "--preset", preset, "--n", "6", "--seed", "0")
    assert (code, out.strip()) == (0, dim)


def test_groebner(capsys):
    code, out, _ = call(capsys, "groebner-check", "--cols", "6")
    assert code == 0
    assert "pairs: 190" in out and "groebner basis: yes" in out
    code, out, _ = call(capsys, "groebner-check", "--cols", "4", "--trace", "--json")
    data = json.loads(out)
    assert data["is_groebner"] and data["generators"] == 4
    assert len(data["remainder_terms"]) == data["pairs"] - data["skipped"]


EXPECTED_TABLES = """\
Classes of V(3,n) in G(3,n)
[V(3,5)] = 1*s[0]
[V(3,6)] = 4*s[1]
[V(3,7)] = 11*s[2] + 6*s[1,1]
[V(3,8)] = 26*s[3] + 23*s[2,1] + 4*s[1,1,1]
[V(3,9)] = 57*s[4] + 63*s[3,1] + 27*s[2,2] + 18*s[2,1,1]

Pluecker degrees
deg V(3,5) = 5
deg V(3,6) = 168
deg V(3,7) = 4032
deg V(3,8) = 84744
deg V(3,9) = 1664091
deg V(3,10) = 31402800
"""


def test_tables_stable(capsys):
    code, out, _ = call(capsys, "paper-tables")
    assert code == 0
    assert out == EXPECTED_TABLES
    assert call(capsys, "paper-tables")[1] == out
    code, out, _ = call(capsys, "paper-tables", "--json")
    data = json.loads(out)
    assert [d["degree"] for d in data["degrees"]] == ["5", "168", "4032", "84744", "1664091", "31402800"]
