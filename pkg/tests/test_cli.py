import json
from importlib import resources

import pytest

from cubical.cli import main

DATA = resources.files("cubical.data")


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--json")
    return code, json.loads(out.out)


def test_braid_on_shipped_sigma(capsys):
    code, rep = run_json(capsys, "braid", str(DATA / "sigma.json"))
    assert code == 0 and rep["word"] == [1] and rep["trivial"] is False


def test_validate_path_reports_exact_interval(capsys):
    code, rep = run_json(capsys, "validate-path", str(DATA / "invalid_path.json"))
    assert code == 1
    (v,) = rep["violations"]
    assert v["segment"] == 1 and v["pair"] == [1, 2]
    assert (v["time"]["lo"], v["time"]["hi"]) == ("3/4", "5/6")
    code, rep = run_json(capsys, "validate-path", str(DATA / "sigma.json"))
    assert code == 0 and rep["violations"] == []


def test_faces(capsys):
    code, rep = run_json(capsys, "trees", "faces", "4")
    assert code == 0 and rep["f_vector"] == [5, 5, 1]
    code, out = run(capsys, "trees", "faces", "4", "--dot")
    assert out.out.startswith("digraph") and out.out.count("->") == 15


def test_enumerate(capsys):
    code, rep = run_json(capsys, "trees", "enumerate", "2", "--max-nodes", "1")
    assert code == 0 and rep["trees"] == [[1, 1]]


def test_assemblies(capsys):
    code, rep = run_json(capsys, "pentagon")
    assert code == 0 and rep["distinct_corners"] == 5 and rep["cone_filling"]["passed"]
    code, rep = run_json(capsys, "triangle", "--alpha", str(DATA / "alpha.json"))
    assert code == 0 and len(rep["edges"]) == 3
    code, rep = run_json(capsys, "hexagon", "--sigma", str(DATA / "sigma.json"))
    assert code == 0 and rep["trivial"] and rep["word"] == [1, 2, -2, -1]


def test_invalid_sigma_names_segment(capsys):
    code, rep = run_json(capsys, "hexagon", "--sigma", str(DATA / "invalid_path.json"))
    assert code == 1 and rep["failure"]["segment"] == 1
    assert rep["failure"]["violation"]["time"]["hi"] == "5/6"


def test_parse_error_has_location(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"times": ["0", "1"],\n "keyframes": [}')
    code, out = run(capsys, "braid", str(bad))
    assert code == 2 and f"{bad}:2:" in out.err
    bad.write_text('{"times": ["0", "1"], "keyframes": [{"dim": 1, "cubes": [[["0", "1"]]]}, {"dim": 1}]}')
    code, out = run(capsys, "validate-path", str(bad))
    assert code == 2 and "keyframes[1]" in out.err


def test_demos(capsys):
    code, rep = run_json(capsys, "moore-demo")
    values = {e["input"]: e["value"] for e in rep["examples"]}
    assert values["(1,2,0;x) * (3,1,2;y)"]["l1"] == "7"
    code, rep = run_json(capsys, "env-demo")
    assert code == 0 and rep["examples"]


def test_selfcheck_seed_env_and_out(capsys, tmp_path, monkeypatch):
    out = tmp_path / "r.json"
    monkeypatch.setenv("CUBICAL_SEED", "7")
    code, _ = run(capsys, "selfcheck", "--suite", "moore", "--trials", "5", "--out", str(out))
    rep = json.loads(out.read_text())
    assert code == 0 and rep["seed"] == 7 and [s["suite"] for s in rep["suites"]] == ["moore"]
    code, rep2 = run_json(capsys, "selfcheck", "--suite", "moore", "--trials", "5", "--seed", "7")
    assert rep2 == rep


def test_bad_seed(capsys):
    with pytest.raises(SystemExit):
        main(["selfcheck", "--seed", "-1"])
