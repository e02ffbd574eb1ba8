"""Acceptance criteria, one test per criterion.

The default selfcheck runs once through the CLI; most criteria are read off
its JSON report, checking both that every relevant check passed and that
it ran at least the required number of cases.  Each criterion records a
PASS/FAIL line, printed at the end of the pytest run (see conftest.py) or
directly when this file is run as a script.
"""

import itertools
import json
import random
import subprocess
import sys
from fractions import Fraction

import pytest

from cubical import braids, enveloping as env, generators as gen, paths, trees
from cubical.cli import main

SEED = 20261016
RESULTS: dict[int, str] = {}


@pytest.fixture(scope="module")
def report(tmp_path_factory):
    out = tmp_path_factory.mktemp("acceptance") / "selfcheck.json"
    code = main(["selfcheck", "--seed", str(SEED), "--out", str(out)])
    raw = out.read_bytes()
    data = json.loads(raw)
    checks = {s["suite"]: {c["name"]: c for c in s["checks"]} for s in data["suites"]}
    return {"code": code, "raw": raw, "checks": checks, "passed": data["passed"]}


def record(n: int, title: str, problems: list[str]):
    ok = not problems
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n:2d}: {title}"
    if problems:
        line += " -- " + "; ".join(problems)
    RESULTS[n] = line
    print(line)
    assert ok, line


def need(report, suite: str, minimums: dict[str, int]) -> list[str]:
    """Problems with the named checks of one suite: failures or too few cases."""
    problems = []
    checks = report["checks"].get(suite, {})
    for name, least in minimums.items():
        c = checks.get(name)
        if c is None:
            problems.append(f"{suite}: missing check '{name}'")
        elif not c["passed"]:
            problems.append(f"{suite}: '{name}' failed {c['failures']}/{c['count']}")
        elif c["count"] < least:
            problems.append(f"{suite}: '{name}' ran {c['count']} < {least}")
    return problems


def all_passed(report, suite: str) -> list[str]:
    checks = report["checks"].get(suite)
    if checks is None:
        return [f"suite {suite} missing"]
    return [f"{suite}: '{n}' failed" for n, c in checks.items() if not c["passed"]]


def test_criterion_01_operad_laws(report):
    record(1, "operad laws on >=1000 random configurations", need(report, "operad", {
        "associativity": 1000,
        "unit laws": 1000,
        "partial associativity (nested)": 1000,
        "partial associativity (parallel)": 1000,
        "equivariance (outer)": 1000,
        "equivariance (inner)": 1000,
    }) + all_passed(report, "operad"))


def test_criterion_02_interchange(report):
    record(2, "interchange pairing and colex variant on >=500 pairs", need(report, "interchange", {
        "rho = gamma(include(a); rho_1(c), ...)": 500,
        "colex composite agrees up to permutation": 500,
    }) + all_passed(report, "interchange"))


def test_criterion_03_enveloping(report):
    problems = need(report, "enveloping", {
        "a o2 c = p(a,c) o1 q(a,c)": 1000,
        "monoid associativity": 500,
        "monoid unit": 500,
    }) + all_passed(report, "enveloping")
    # every labelled/unlabelled pattern of a triple, independently of the suite
    rng = random.Random(SEED)
    m = env.env_multiply
    for pattern in itertools.product((True, False), repeat=3):
        for _ in range(20):
            a, b, c = (gen.random_env(rng, labelled) for labelled in pattern)
            if m(m(a, b), c) != m(a, m(b, c)):
                problems.append(f"associativity fails for label pattern {pattern}")
                break
    record(3, "enveloping decomposition (>=1000) and monoid laws (>=500, all label cases)", problems)


def test_criterion_04_normalization(report):
    record(4, "f_m retraction, f-square (>=500) and multiplicativity (>=200)", need(report, "enveloping-normalization", {
        "f_m then o1 is the identity": 500,
        "f-square commutes": 500,
        "normalization multiplicative": 200,
    }) + all_passed(report, "enveloping-normalization"))


def test_criterion_05_homotopies(report):
    record(5, "H and G endpoint laws and the H inequality at five times", need(report, "homotopies", {
        "H(1) = id": 500,
        "H(0) lands at (1/2, 1)": 500,
        "G(1) = id": 500,
        "G(0) = chi psi": 500,
        "H inequality (1-t)+td > 1/2+t(c-1/2)": 2500,
    }) + all_passed(report, "homotopies"))


def test_criterion_06_interchange_homotopy(report):
    checks = report["checks"].get("interchange-homotopy", {})
    problems = all_passed(report, "interchange-homotopy")
    for base, least in (("g o diag = id", 500), ("h(1) = id", 500), ("h(0) = diag o g", 500),
                        ("h positivity", 2500), ("p-compatibility", 2500), ("q-compatibility", 2500)):
        kinds = {n: c["count"] for n, c in checks.items() if n.startswith(base + " (")}
        if sum(kinds.values()) < least:
            problems.append(f"'{base}' ran {sum(kinds.values())} < {least}")
        if not {f"{base} (Dbar)", f"{base} (mixed)"} <= set(kinds):
            problems.append(f"'{base}' lacks D-bar variants")
    record(6, "g o diag, h endpoints, positivity, p/q compatibility (>=500 tuples, 5 times)", problems)


def test_criterion_07_moore(report):
    record(7, "Moore and C monoid laws, both embeddings homomorphic (>=500)", need(report, "moore", {
        "Moore associativity": 500,
        "Moore unit": 500,
        "C associativity": 500,
        "C unit": 500,
        "embed_moore homomorphism": 500,
        "embed_env homomorphism": 500,
    }) + all_passed(report, "moore"))


def test_criterion_08_pentagon(report):
    problems = all_passed(report, "pentagon")
    loop = paths.assemble_pentagon()
    if len(set(loop.corners)) != 5 or len(loop.edges) != 5:
        problems.append("pentagon does not have 5 distinct corners")
    filling = paths.cone_fill(loop)
    for x, y in itertools.chain(((filling.apex, r) for r in filling.rim), zip(filling.rim, filling.rim[1:])):
        if not paths.validate_segment(x, y).valid:
            problems.append("a cone seam fails the segment checker")
            break
    record(8, "pentagon closes with 5 distinct corners; every cone seam certified", problems)


def test_criterion_09_unit_triangle(report):
    problems = all_passed(report, "unit-triangle")
    loop = paths.assemble_unit_triangle()
    if len(loop.edges) != 3 or not any(e.name == "alpha o (1,i,1)" for e in loop.edges):
        problems.append("unit triangle edges wrong")
    paths.cone_fill(loop).certify()
    record(9, "unit triangle closes with 3 edges including alpha o (1,i,1); filling certified", problems)


def test_criterion_10_hexagon(report):
    problems = all_passed(report, "hexagon")
    word = braids.extract_braid(paths.assemble_hexagon().as_path())
    if not braids.is_trivial(word):
        problems.append(f"hexagon word {word} is not trivial")
    if not braids.braid_equal(braids.BraidWord(3, (1, 2, 1)), braids.BraidWord(3, (2, 1, 2))):
        problems.append("braid relation fails")
    record(10, "hexagon word is the identity in B_3; braid relation holds", problems)


def test_criterion_11_symmetry(report):
    problems = all_passed(report, "symmetry")
    s = paths.sigma_braid()
    loop = paths.concat(s, paths.permute_path(s, paths.SWAP))
    word = braids.extract_braid(loop)
    if word.to_json() != [1, 1] or braids.is_trivial(word) or braids.permutation_image(word) != (0, 1):
        problems.append(f"sigma . sigma tau gives {word}")
    h = paths.stabilize_fill(loop)
    cert = h.certify()
    if h.grid[0][0].dim != 3 or not cert["triangles"]:
        problems.append("stabilized null homotopy is not in LC_3(2)")
    record(11, "sigma . sigma tau is s1^2, nontrivial, pure; stabilized filling certified", problems)


def test_criterion_12_validator(report):
    problems = need(report, "validator", {
        "agrees with 1000-sample oracle": 200,
        "agrees with critical-point oracle": 200,
        "shipped invalid example: exact uncovered interval": 1,
    }) + all_passed(report, "validator")
    found = paths.validate_path(*_shipped_invalid())
    gap = found[0].time if len(found) == 1 else None
    if gap != paths.Gap(Fraction(3, 4), Fraction(5, 6), False, False):
        problems.append(f"shipped invalid example reports {gap}")
    record(12, "validator agrees with oracles on 200 segments; shipped gap is (3/4, 5/6)", problems)


def _shipped_invalid():
    from cubical.data import load
    from cubical.operad import CubesConfig
    raw = load("invalid_path.json")
    return [CubesConfig.from_json(k) for k in raw["keyframes"]], raw["times"]


def test_criterion_13_trees(report):
    problems = need(report, "trees", {
        "associahedron vertices are Catalan": 7,
        "associahedron Euler characteristic 1": 7,
        "K(4) is a pentagon": 1,
        "exhaustive squares (up to 4 nodes)": 1,
        "random squares (up to 6 nodes)": 500,
        "transitivity square (sequential)": 500,
        "transitivity square (parallel)": 500,
        "left unit triangle": 1,
        "right unit triangle": 1,
    }) + all_passed(report, "trees")
    for n in range(2, 9):
        k = trees.associahedron_faces(n)
        if k.f_vector[0] != trees.catalan(n - 1) or k.euler_characteristic != 1:
            problems.append(f"K({n}) has f-vector {k.f_vector}")
    record(13, "associahedra n=2..8; coherence exhaustive to 4 nodes and >=500 random to 6", problems)


def test_criterion_14_determinism(report, tmp_path):
    again = tmp_path / "again.json"
    subprocess.run([sys.executable, "-m", "cubical.cli", "selfcheck", "--seed", str(SEED),
                    "--jobs", "4", "--out", str(again)], check=False, capture_output=True)
    problems = []
    if report["code"] != 0 or not report["passed"]:
        problems.append("default selfcheck did not pass")
    if not again.exists() or again.read_bytes() != report["raw"]:
        problems.append("second run differs byte-wise")
    record(14, "two selfcheck runs with the same seed give byte-identical JSON", problems)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
