import json

import pytest

from chaintop.cli import main

C3 = '{"n": 3, "mode": "hasse", "pairs": [[0, 1], [1, 2]]}'


@pytest.fixture
def c3_file(tmp_path):
    path = tmp_path / "c3.json"
    path.write_text(C3)
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_poset_check(capsys, c3_file):
    code, out, _ = run_cli(capsys, "poset", "check", c3_file)
    assert code == 0
    data = json.loads(out)
    assert data["ok"] and data["n"] == 3


def test_poset_check_rejects_bad_file(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2, "mode": "full", "pairs": [[0,1],[1,0]]}')
    code, _, err = run_cli(capsys, "poset", "check", str(bad))
    assert code == 2
    assert "antisymmetric" in err


def test_poset_classify_and_maxchains(capsys, c3_file):
    code, out, _ = run_cli(capsys, "poset", "classify", c3_file)
    assert code == 0 and json.loads(out)["is_chain"]
    code, out, _ = run_cli(capsys, "poset", "maxchains", c3_file)
    assert json.loads(out) == [[0, 1, 2]]


def test_poset_query(capsys, c3_file):
    code, out, _ = run_cli(capsys, "poset", "query", c3_file, "cone", "--set", "1", "--dir", "down")
    assert json.loads(out) == [0, 1]
    code, out, _ = run_cli(capsys, "poset", "query", c3_file, "extremum", "--set", "0,1", "--kind", "sup")
    assert json.loads(out) == 1
    code, out, _ = run_cli(capsys, "poset", "query", c3_file, "dmclosure", "--set", "1")
    assert json.loads(out) == [0, 1]
    code, out, _ = run_cli(capsys, "poset", "query", c3_file, "directed", "--set", "")
    assert json.loads(out) is False


def test_poset_cutstable(capsys, tmp_path, c3_file):
    c2 = tmp_path / "c2.json"
    c2.write_text('{"n": 2, "mode": "hasse", "pairs": [[0, 1]]}')
    code, out, _ = run_cli(capsys, "poset", "cutstable", str(c2), c3_file, "--image", "0,2")
    assert code == 0 and json.loads(out) is True


def test_topo_roundtrip(capsys, c3_file, tmp_path):
    code, out, _ = run_cli(capsys, "topo", "make", c3_file, "upper")
    assert code == 0
    nu = tmp_path / "nu.json"
    nu.write_text(out)
    code, out, _ = run_cli(capsys, "topo", "make", c3_file, "scott")
    sc = tmp_path / "sc.json"
    sc.write_text(out)
    code, out, _ = run_cli(capsys, "topo", "equal", str(nu), str(sc))
    assert code == 0 and json.loads(out) is True
    code, out, _ = run_cli(capsys, "topo", "join", str(nu), str(sc))
    assert json.loads(out)["n"] == 3


def test_topo_equal_differs(capsys, c3_file, tmp_path):
    for name in ("upper", "lower"):
        code, out, _ = run_cli(capsys, "topo", "make", c3_file, name)
        (tmp_path / f"{name}.json").write_text(out)
    code, out, _ = run_cli(capsys, "topo", "equal", str(tmp_path / "upper.json"), str(tmp_path / "lower.json"))
    assert code == 1 and json.loads(out) is False


def test_topo_report(capsys, c3_file):
    code, out, _ = run_cli(capsys, "topo", "report", c3_file, "intrinsic")
    assert json.loads(out) == {
        "t1": True,
        "hausdorff": True,
        "normal": True,
        "completely_normal": True,
    }


def test_waybelow(capsys, c3_file):
    code, out, _ = run_cli(capsys, "waybelow", "0", "1", "--poset", c3_file)
    assert json.loads(out) is True
    code, out, _ = run_cli(capsys, "waybelow", "1/2", "1/2", "--chain", "rat01")
    assert json.loads(out) is False
    code, out, _ = run_cli(capsys, "waybelow", "1", "2", "--poset", c3_file, "--www")
    assert json.loads(out) is True


def test_suite_run(capsys):
    code, out, err = run_cli(
        capsys, "suite", "run", "--claims", "cor6,prop5", "--max-n", "4", "--seed", "1"
    )
    assert code == 0
    report = json.loads(out)
    assert report["passed"] is True
    assert [c["claim"] for c in report["claims"]] == ["cor6", "prop5"]
    assert "prop5" in err  # human table on stderr


def test_suite_run_json_only(capsys):
    code, out, err = run_cli(
        capsys, "suite", "run", "--claims", "cor6", "--max-n", "3", "--json"
    )
    assert code == 0
    assert json.loads(out)["passed"] is True
    assert err == ""


def test_suite_run_with_fault_fails(capsys):
    code, out, _ = run_cli(
        capsys,
        "suite", "run", "--claims", "prop5", "--max-n", "3", "--inject-fault", "scott",
    )
    assert code == 1
    assert json.loads(out)["passed"] is False


def test_search(capsys):
    code, out, _ = run_cli(capsys, "search", "pospace_fails_for_upper", "--min-n", "2", "--max-n", "3")
    assert code == 0
    data = json.loads(out)
    assert data["found"] and "witness" in data


def test_decompose_chain(capsys):
    code, out, _ = run_cli(capsys, "decompose", "--chain", "int", "--intervals", "[1,3],[4,6]")
    assert json.loads(out) == {"normalized": "[1,6]", "components": ["[1,6]"]}


def test_decompose_finite(capsys, c3_file):
    code, out, _ = run_cli(
        capsys, "decompose", "--poset", c3_file, "--name", "intrinsic", "--set", "0,2"
    )
    assert json.loads(out) == [[0], [2]]


def test_separate(capsys):
    code, out, _ = run_cli(
        capsys,
        "separate", "--chain", "rat01", "--lower", "(-inf,1/2]", "--point", "3/4", "--depth", "3",
    )
    assert code == 0
    data = json.loads(out)
    assert data["verification"] == {
        "monotone_ok": True,
        "zero_on_A_ok": True,
        "one_at_x_ok": True,
        "continuity_ok": True,
    }
    assert data["function"]["cuts"][0]["value"] == "0"


def test_missing_file_is_reported(capsys):
    code, _, err = run_cli(capsys, "poset", "check", "/nonexistent/p.json")
    assert code == 2 and "error" in err
