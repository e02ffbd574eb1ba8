"""Command-line front end.

Every command builds a JSON-ready report.  ``--json`` prints it instead of
the human summary and ``--out FILE`` also writes it to FILE.  Exit status is
0 when everything checked passes, 1 when a check fails or an input path is
invalid, and 2 for unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional

from . import __version__, braids, enveloping as env, moore, paths, suites, trees
from .free_algebra import gen
from .operad import AElement, CubesConfig, GeometryError, rat

SEED_ENV = "CUBICAL_SEED"
U64 = 1 << 64


class InputError(Exception):
    """Malformed user input; the message carries the location."""


# -- input -----------------------------------------------------------------

def _u64(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= value < U64:
        raise argparse.ArgumentTypeError(f"seed must lie in [0, 2^64): {text}")
    return value


def _count(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {text}")
    return value


def resolve_seed(seed: Optional[int]) -> int:
    if seed is not None:
        return seed
    raw = os.environ.get(SEED_ENV)
    if raw is None or raw.strip() == "":
        return 0
    try:
        return _u64(raw.strip())
    except argparse.ArgumentTypeError as exc:
        raise InputError(f"{SEED_ENV}: {exc}") from None


def read_json(file: str):
    try:
        text = Path(file).read_text()
    except OSError as exc:
        raise InputError(f"{file}: {exc.strerror or exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{file}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def _at(where: str, fn: Callable):
    try:
        return fn()
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        msg = f"missing key {exc}" if isinstance(exc, KeyError) else str(exc)
        raise InputError(f"{where}: {msg}") from None


def decode_path_parts(obj, where: str) -> tuple[list[CubesConfig], list[Fraction]]:
    """Keyframes and times of a JSON path, with errors located by JSON path."""
    if not isinstance(obj, dict):
        raise InputError(f"{where}: expected an object with 'times' and 'keyframes'")
    for key in ("times", "keyframes"):
        if not isinstance(obj.get(key), list):
            raise InputError(f"{where}: '{key}' must be a list")
    kfs = [_at(f"{where}: keyframes[{k}]", lambda k=k: CubesConfig.from_json(obj["keyframes"][k]))
           for k in range(len(obj["keyframes"]))]
    times = [_at(f"{where}: times[{k}]", lambda k=k: rat(obj["times"][k])) for k in range(len(obj["times"]))]
    if kfs:
        dim, arity = kfs[0].dim, kfs[0].arity
        for k, c in enumerate(kfs):
            if (c.dim, c.arity) != (dim, arity):
                raise InputError(f"{where}: keyframes[{k}] has dim {c.dim}, arity {c.arity}; "
                                 f"keyframes[0] has dim {dim}, arity {arity}")
        for key, actual in (("dim", dim), ("arity", arity)):
            if key in obj and obj[key] != actual:
                raise InputError(f"{where}: declared {key} {obj[key]} but keyframes have {key} {actual}")
    if len(kfs) < 2 or len(kfs) != len(times):
        raise InputError(f"{where}: need at least two keyframes and one time per keyframe "
                         f"(got {len(kfs)} keyframes, {len(times)} times)")
    if times[0] != 0 or times[-1] != 1 or any(a >= b for a, b in zip(times, times[1:])):
        raise InputError(f"{where}: times must increase strictly from 0 to 1")
    return kfs, times


def load_path(file: str) -> paths.PLPath:
    """Read a path file; an invalid segment raises PathError naming it."""
    kfs, times = decode_path_parts(read_json(file), file)
    return paths.PLPath(tuple(kfs), tuple(times))


# -- output ----------------------------------------------------------------

def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _path_failure(exc: paths.PathError, role: str) -> dict:
    out = {"input": role, "error": str(exc)}
    if exc.segment is not None:
        out["segment"] = exc.segment
    v = getattr(exc, "violation", None)
    if isinstance(v, paths.PathViolation):
        out["violation"] = v.to_json()
    return out


def _user_path(file: Optional[str], role: str):
    """(path or None, failure report or None)."""
    if file is None:
        return None, None
    try:
        return load_path(file), None
    except paths.PathError as exc:
        return None, _path_failure(exc, role)


# -- commands --------------------------------------------------------------
# each returns (report, human lines)

def cmd_selfcheck(args) -> tuple[dict, list[str]]:
    seed = resolve_seed(args.seed)
    try:
        reports = suites.run_suites(args.suite, seed=seed, trials=args.trials, jobs=args.jobs)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None
    passed = all(r.passed for r in reports)
    report = {
        "command": "selfcheck",
        "seed": seed,
        "trials": args.trials,
        "passed": passed,
        "suites": [r.to_json() for r in reports],
    }
    width = max(len(r.suite) for r in reports)
    lines = []
    for r in reports:
        count = sum(c.count for c in r.checks)
        lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.suite:<{width}}  "
                     f"{len(r.checks):3d} checks {count:6d} cases  {r.seconds:6.1f}s")
        for c in r.checks:
            if not c.passed:
                lines.append(f"      {c.name}: {c.failures}/{c.count} failed")
                lines.append(f"      witness: {json.dumps(c.witness, sort_keys=True)}")
    good = sum(r.passed for r in reports)
    lines.append(f"seed {seed}: {good}/{len(reports)} suites passed")
    return report, lines


def _loop_report(name: str, loop: paths.LoopSpec) -> dict:
    return {
        "command": name,
        "edges": loop.describe(),
        "corners": [c.to_json() for c in loop.corners],
        "loop": loop.as_path().to_json(),
    }


def _certify(fill: Callable, loop) -> dict:
    try:
        return {"passed": True, **fill(loop).certify()}
    except paths.PathError as exc:
        return {"passed": False, **_path_failure(exc, "filling")}


def _filling_lines(report: dict, keys: list[str]) -> list[str]:
    lines = [f"edges: {', '.join(report['edges'])}"]
    for k in keys:
        cert = report[k]
        if cert["passed"]:
            lines.append(f"{k.replace('_', ' ')}: certified ({cert['seams']} seams, {cert['triangles']} triangles)")
        else:
            lines.append(f"{k.replace('_', ' ')}: FAILED: {cert['error']}")
    return lines


def _failure_lines(failure: dict) -> list[str]:
    return [f"invalid {failure['input']} path: {failure['error']}"]


def cmd_pentagon(args):
    alpha, failure = _user_path(args.alpha, "alpha")
    if failure:
        return {"command": "pentagon", "passed": False, "failure": failure}, _failure_lines(failure)
    loop = _assemble(lambda: paths.assemble_pentagon(alpha))
    report = _loop_report("pentagon", loop)
    corners = loop.corners
    report["distinct_corners"] = len(set(corners))
    report["cone_filling"] = _certify(paths.cone_fill, loop)
    report["stabilized_filling"] = _certify(paths.stabilize_fill, loop)
    report["passed"] = (len(loop.edges) == 5 and len(set(corners)) == 5
                        and report["cone_filling"]["passed"] and report["stabilized_filling"]["passed"])
    lines = _filling_lines(report, ["cone_filling", "stabilized_filling"])
    lines.insert(1, f"corners: {len(corners)} ({len(set(corners))} distinct)")
    lines.append("pentagon " + ("certified" if report["passed"] else "NOT certified"))
    return report, lines


def cmd_triangle(args):
    alpha, failure = _user_path(args.alpha, "alpha")
    if failure:
        return {"command": "triangle", "passed": False, "failure": failure}, _failure_lines(failure)
    loop = _assemble(lambda: paths.assemble_unit_triangle(alpha))
    report = _loop_report("triangle", loop)
    report["cone_filling"] = _certify(paths.cone_fill, loop)
    report["passed"] = len(loop.edges) == 3 and report["cone_filling"]["passed"]
    lines = _filling_lines(report, ["cone_filling"])
    lines.append("unit triangle " + ("certified" if report["passed"] else "NOT certified"))
    return report, lines


def cmd_hexagon(args):
    sigma, failure = _user_path(args.sigma, "sigma")
    if not failure:
        alpha, failure = _user_path(args.alpha, "alpha")
    if failure:
        return {"command": "hexagon", "passed": False, "failure": failure}, _failure_lines(failure)
    loop = _assemble(lambda: paths.assemble_hexagon(sigma, alpha, args.sigma_slot))
    report = _loop_report("hexagon", loop)
    try:
        word = braids.extract_braid(loop.as_path())
    except braids.DegenerateCrossing as exc:
        report.update(passed=False, error=f"braid word undefined: {exc}")
        return report, [f"edges: {', '.join(report['edges'])}", report["error"]]
    trivial = braids.is_trivial(word)
    report["word"] = word.to_json()
    report["trivial"] = trivial
    report["permutation"] = list(braids.permutation_image(word))
    report["stabilized_filling"] = _certify(paths.stabilize_fill, loop)
    report["passed"] = trivial and report["stabilized_filling"]["passed"]
    lines = _filling_lines(report, ["stabilized_filling"])
    lines.append(f"boundary word: {word}")
    lines.append("word is the identity in B_3" if trivial else "word is NOT the identity in B_3")
    return report, lines


def _assemble(build: Callable) -> paths.LoopSpec:
    try:
        return build()
    except paths.PathError as exc:
        raise InputError(str(exc)) from None


def cmd_braid(args):
    try:
        path = load_path(args.path)
    except paths.PathError as exc:
        failure = _path_failure(exc, args.path)
        return {"command": "braid", "passed": False, "failure": failure}, _failure_lines(failure)
    if path.dim != 2:
        raise InputError(f"{args.path}: braid words need a path in dimension 2, got {path.dim}")
    try:
        word = braids.extract_braid(path)
    except braids.DegenerateCrossing as exc:
        return {"command": "braid", "passed": False, "error": str(exc)}, [f"braid word undefined: {exc}"]
    trivial = braids.is_trivial(word)
    perm = braids.permutation_image(word)
    report = {
        "command": "braid",
        "passed": True,
        "strands": word.strands,
        "word": word.to_json(),
        "trivial": trivial,
        "permutation": list(perm),
        "closed": path.is_closed(),
    }
    lines = [
        f"word: {word.to_json()}  ({word})",
        f"trivial in B_{word.strands}: {'yes' if trivial else 'no'}",
        f"permutation: {[p + 1 for p in perm]}",
    ]
    return report, lines


def cmd_validate_path(args):
    kfs, times = decode_path_parts(read_json(args.path), args.path)
    found = paths.validate_path(kfs, times)
    report = {
        "command": "validate-path",
        "segments": len(kfs) - 1,
        "passed": not found,
        "violations": [v.to_json() for v in found],
    }
    lines = [str(v) for v in found]
    lines.append(f"{len(kfs) - 1} segments, " + ("all valid" if not found else f"{len(found)} invalid"))
    return report, lines


def cmd_trees_enumerate(args):
    max_nodes = args.n if args.max_nodes is None else args.max_nodes
    poset = trees.enumerate_Tn(args.n, max_nodes, args.max_undistinguished)
    report = {"command": "trees enumerate", "passed": True, **poset.to_json()}
    lines = [f"{len(poset.trees)} trees, {len(poset.covers)} single-edge contractions"]
    lines += [f"  {k:3d}  {'empty' if t is None else t}" for k, t in enumerate(poset.trees)]
    return report, lines, poset.to_dot


def cmd_trees_faces(args):
    k = trees.associahedron_faces(args.n, args.indexing)
    report = {"command": "trees faces", "indexing": args.indexing, "passed": True, **k.to_json()}
    fv = k.f_vector
    lines = [f"K({args.n}) [{args.indexing} indexing, {k.leaves} leaves]: dimension {len(fv) - 1}",
             "f-vector: " + "/".join(str(x) for x in fv),
             f"Euler characteristic: {k.euler_characteristic}"]
    return report, lines, k.to_dot


def cmd_trees_coherence(args):
    seed = resolve_seed(args.seed)
    trials = 500 if args.trials is None else args.trials
    rep = trees.check_partial_lax_coherence(args.n_max, trials, seed)
    report = {"command": "trees coherence", "seed": seed, "n_max": args.n_max, "trials": trials, **rep.to_json()}
    lines = [f"{name}: {count}" for name, count in sorted(rep.checks.items())]
    lines += [f"FAILED {f}" for f in rep.failures[:10]]
    lines.append("all squares and triangles commute" if rep.passed else f"{len(rep.failures)} failures")
    return report, lines


def cmd_env_demo(args):
    x, y = gen("x"), gen("y")
    half = Fraction(1, 2)
    d = env.DPoint(half, 1)
    e1 = env.EnvElement(half, 1, x)
    e2 = env.EnvElement(half, 1, y)
    a = AElement.of((Fraction(1, 8), Fraction(1, 4)), (half, Fraction(3, 4)))
    pt, b = env.f_m(a)
    rows = [
        ("p((1/2,1), (1/2,1))", env.p(d, d)),
        ("q((1/2,1), (1/2,1))", env.q(d, d)),
        ("(1/2,1,x) * (1/2,1,y)", env.env_multiply(e1, e2)),
        ("(1/2,1,x) * [1/4,3/4]", env.env_multiply(e1, env.EnvElement(Fraction(1, 4), Fraction(3, 4)))),
        ("f_1(([1/8,1/4],[1/2,3/4]))", [pt, b]),
        ("chi((1/2,1,x))", env.chi(e1)),
        ("psi(x)", env.psi(x)),
        ("H(1/2, (3/4,1,x))", env.H(half, env.EnvElement(Fraction(3, 4), 1, x))),
        ("G(1/2, x)", env.G(half, x)),
        ("g([(1/2,1), (1/4,1/2)])", env.g_max_min([d, env.DPoint(Fraction(1, 4), half)])),
        ("h(1/2, [(1/2,1), (1/4,1/2)])", env.h(half, [d, env.DPoint(Fraction(1, 4), half)])),
    ]
    return _demo("env-demo", rows)


def cmd_moore_demo(args):
    x, y = gen("x"), gen("y")
    m1, m2 = moore.MooreElement(2, x), moore.MooreElement(1, y)
    c1, c2 = moore.CElement(1, 2, 0, x), moore.CElement(3, 1, 2, y)
    rows = [
        ("(2,x) * (1,y)", moore.moore_multiply(m1, m2)),
        ("(1,x) * (1)", moore.moore_multiply(moore.MooreElement(1, x), moore.MooreElement(1))),
        ("(1,2,0;x) * (3,1,2;y)", moore.c_multiply(c1, c2)),
        ("embed (2,x)", moore.embed_moore(m1)),
        ("embed (1/2,1,x)", moore.embed_env(env.EnvElement(Fraction(1, 2), 1, x))),
        ("chi((2,x) * (1,y))", moore.moore_chi(moore.moore_multiply(m1, m2))),
    ]
    return _demo("moore-demo", rows)


def _demo(name: str, rows) -> tuple[dict, list[str]]:
    report = {"command": name, "passed": True, "examples": [{"input": k, "value": suites._js(v)} for k, v in rows]}
    width = max(len(k) for k, _ in rows)
    lines = [f"{k:<{width}}  =  {_show(v)}" for k, v in rows]
    return report, lines


def _show(v) -> str:
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_show(w) for w in v) + "]"
    if hasattr(v, "coords"):
        return "(" + ", ".join(str(c) for c in v.coords()) + ")"
    if isinstance(v, (env.EnvElement, moore.MooreElement, moore.CElement)):
        fields = {k: w for k, w in vars(v).items() if k != "label"}
        head = ", ".join(str(w) for w in fields.values())
        return f"({head}; {v.label!r})" if v.label is not None else f"({head})"
    return repr(v)


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("--json", action="store_true", help="print the JSON report instead of the summary")
    out.add_argument("--out", metavar="FILE", help="also write the JSON report to FILE")
    seeded = argparse.ArgumentParser(add_help=False)
    seeded.add_argument("--seed", type=_u64, help=f"u64 seed (default ${SEED_ENV}, else 0)")
    seeded.add_argument("--trials", type=_count, help="random trials per check (0: deterministic checks only)")

    parser = argparse.ArgumentParser(prog="cubical", description="Exact little-cubes verification tools.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("selfcheck", parents=[out, seeded], help="run every invariant suite")
    p.add_argument("--jobs", type=_count, default=1, help="worker processes (default 1)")
    p.add_argument("--suite", action="append", metavar="NAME", choices=sorted(suites.SUITES),
                   help="run only this suite (repeatable)")
    p.set_defaults(fn=cmd_selfcheck)

    p = sub.add_parser("pentagon", parents=[out], help="assemble and fill the associativity pentagon")
    p.add_argument("--alpha", metavar="FILE", help="path in A(3) from mu o1 mu to mu o2 mu")
    p.set_defaults(fn=cmd_pentagon)

    p = sub.add_parser("triangle", parents=[out], help="assemble and fill the unit triangle")
    p.add_argument("--alpha", metavar="FILE", help="path in A(3) from mu o1 mu to mu o2 mu")
    p.set_defaults(fn=cmd_triangle)

    p = sub.add_parser("hexagon", parents=[out], help="assemble the braid hexagon and read its word")
    p.add_argument("--sigma", metavar="FILE", help="path in LC_2(2) from mu to mu tau")
    p.add_argument("--alpha", metavar="FILE", help="path in A(3) from mu o1 mu to mu o2 mu")
    p.add_argument("--sigma-slot", type=int, choices=(1, 2), default=2,
                   help="slot of sigma receiving mu on the fifth edge (default 2)")
    p.set_defaults(fn=cmd_hexagon)

    p = sub.add_parser("braid", parents=[out], help="braid word of a path in LC_2(k)")
    p.add_argument("path", help="path file (JSON)")
    p.set_defaults(fn=cmd_braid)

    p = sub.add_parser("validate-path", parents=[out], help="exact validity check of a PL path")
    p.add_argument("path", help="path file (JSON)")
    p.set_defaults(fn=cmd_validate_path)

    p = sub.add_parser("trees", help="planar trees")
    tsub = p.add_subparsers(dest="trees_command", required=True, metavar="ACTION")
    q = tsub.add_parser("enumerate", parents=[out], help="trees with n distinguished leaves and their contractions")
    q.add_argument("n", type=_count)
    q.add_argument("--max-nodes", type=_count, help="internal node bound (default n)")
    q.add_argument("--max-undistinguished", type=_count, default=0)
    q.add_argument("--dot", action="store_true", help="print the Hasse diagram as DOT")
    q.set_defaults(fn=cmd_trees_enumerate)
    q = tsub.add_parser("faces", parents=[out], help="face lattice of the associahedron K(n)")
    q.add_argument("n", type=_count)
    q.add_argument("--indexing", choices=("leaves", "shifted"), default="leaves",
                   help="leaves: K(n) has n leaves; shifted: K(n) has n+1 leaves, so K(2) is the interval")
    q.add_argument("--dot", action="store_true", help="print the face lattice as DOT")
    q.set_defaults(fn=cmd_trees_faces)
    q = tsub.add_parser("coherence", parents=[out, seeded], help="check transitivity squares and unit triangles")
    q.add_argument("--n-max", type=_count, default=4, help="internal node bound for the exhaustive part")
    q.set_defaults(fn=cmd_trees_coherence)

    p = sub.add_parser("env-demo", parents=[out], help="worked examples in the enveloping monoid")
    p.set_defaults(fn=cmd_env_demo)
    p = sub.add_parser("moore-demo", parents=[out], help="worked examples in the Moore and C monoids")
    p.set_defaults(fn=cmd_moore_demo)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.fn(args)
    except (InputError, GeometryError, ValueError) as exc:
        message = str(exc)
        report = {"command": args.command, "passed": False, "error": message}
        if args.json:
            sys.stdout.write(dumps(report))
        print(f"cubical: error: {message}", file=sys.stderr)
        return 2
    report, lines = result[0], result[1]
    text = dumps(report)
    if args.out:
        Path(args.out).write_text(text)
    if args.json:
        sys.stdout.write(text)
    elif getattr(args, "dot", False):
        sys.stdout.write(result[2]())
    else:
        print("\n".join(lines))
    return 0 if report["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
