"""Invariant suites shared by the ``selfcheck`` command and the test-suite.

Each suite takes a seed and a trial count and returns a :class:`SuiteReport`.
A suite draws from its own generator, seeded by ``"<seed>:<suite name>"``,
so suites are independent and can run in any order or in parallel.
``trials=None`` means the suite's default count; ``trials=0`` keeps only
the deterministic checks.
"""

from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from . import braids, data, enveloping as env, generators as gen, moore, paths, trees
from .free_algebra import apply, gen as generator, unit_term
from .operad import (
    EMPTY_A,
    HALF,
    MU,
    ONE,
    AElement,
    CubesConfig,
    block_permutation,
    block_sum,
    circ,
    config_from_lists,
    gamma,
    include_dim,
    lex_to_colex,
    pairing_rho,
    permute,
    rho_one,
    unit_config,
)

T_GRID = tuple(Fraction(k, 4) for k in range(5))
T_THIRDS = (Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(1))


@dataclass
class Check:
    name: str
    count: int = 0
    failures: int = 0
    witness: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "count": self.count}
        if self.failures:
            out["failures"] = self.failures
            out["witness"] = self.witness
        return out


@dataclass
class SuiteReport:
    suite: str
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0  # human output only; kept out of JSON for byte-stable reports

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {"suite": self.suite, "passed": self.passed, "checks": [c.to_json() for c in self.checks]}


class Recorder:
    def __init__(self, suite: str):
        self.report = SuiteReport(suite)
        self._by_name: dict[str, Check] = {}

    def _get(self, name: str) -> Check:
        if name not in self._by_name:
            self._by_name[name] = Check(name)
            self.report.checks.append(self._by_name[name])
        return self._by_name[name]

    def check(self, name: str, ok: bool, witness: Callable[[], dict] = dict):
        c = self._get(name)
        c.count += 1
        if not ok:
            c.failures += 1
            if c.witness is None:
                c.witness = witness()

    def guard(self, name: str, fn: Callable[[], bool], witness: Callable[[], dict] = dict):
        """Like :meth:`check`, but an exception counts as a failure."""
        try:
            ok = bool(fn())
        except Exception as exc:  # noqa: BLE001 - report, never crash a suite
            ok = False
            inner, error = witness, f"{type(exc).__name__}: {exc}"
            witness = lambda: {**inner(), "error": error}  # noqa: E731
        self.check(name, ok, witness)


def _n(trials: Optional[int], default: int) -> int:
    return default if trials is None else trials


def _js(x):
    """JSON form of library values for witnesses."""
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_js(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _js(v) for k, v in x.items()}
    if hasattr(x, "to_json"):
        return x.to_json()
    if hasattr(x, "coords"):
        return [str(c) for c in x.coords()]
    return repr(x)


# -- operad-core -----------------------------------------------------------

def _split(rng: random.Random, total: int, parts: int) -> list[int]:
    out = [0] * parts
    for _ in range(total):
        out[rng.randrange(parts)] += 1
    return out


def suite_operad(rng: random.Random, trials: Optional[int]) -> SuiteReport:
    rec = Recorder("operad")
    # deterministic anchors
    mu_mu_1 = AElement.of((0, Fraction(1, 4)), (Fraction(1, 4), HALF), (HALF, 1))
    mu_mu_2 = AElement.of((0, HALF), (HALF, Fraction(3, 4)), (Fraction(3, 4), 1))
    rec.check("anchor: mu o1 mu", circ(MU, 1, MU) == mu_mu_1)
    rec.check("anchor: mu o2 mu", circ(MU, 2, MU) == mu_mu_2)
    rec.check("anchor: mu o1 i", circ(MU, 1, EMPTY_A) == AElement.of((HALF, 1)))
    rec.check("anchor: mu o2 i", circ(MU, 2, EMPTY_A) == AElement.of((0, HALF)))
    rec.check("anchor: swap mu", permute(MU.as_config(), (1, 0)) == config_from_lists([[(HALF, 1)], [(0, HALF)]]))
    for _ in range(_n(trials, 1000)):
        dim = rng.randint(1, 3)
        m = rng.randint(1, 3)
        arities = _split(rng, rng.randint(0, 5), m)
        a = gen.random_config(rng, dim, m)
        bs = [gen.random_config(rng, dim, k) for k in arities]
        total = sum(arities)
        c_ar = _split(rng, rng.randint(0, 5), total) if total else []
        cs = [gen.random_config(rng, dim, k) for k in c_ar]
        w = lambda: {"a": a.to_json(), "bs": _js(bs), "cs": _js(cs)}  # noqa: E731

        def assoc():
            left = gamma(gamma(a, bs), cs)
            blocks, k = [], 0
            for b in bs:
                blocks.append(gamma(b, cs[k:k + b.arity]))
                k += b.arity
            return left == gamma(a, blocks)

        rec.guard("associativity", assoc, w)
        u = unit_config(dim)
        rec.guard("unit laws", lambda: gamma(u, [a]) == a and gamma(a, [u] * a.arity) == a, w)

        # partial compositions on a fresh outer element of arity 2..5
        p = gen.random_config(rng, dim, rng.randint(2, 5))
        b = gen.random_config(rng, dim, rng.randint(1, 3))
        c = gen.random_config(rng, dim, rng.randint(0, 2))
        i, j = rng.randint(1, p.arity), rng.randint(1, b.arity)
        wp = lambda: {"p": p.to_json(), "b": b.to_json(), "c": c.to_json(), "i": i, "j": j}  # noqa: E731
        rec.guard("partial associativity (nested)",
                  lambda: circ(p, i, circ(b, j, c)) == circ(circ(p, i, b), i + j - 1, c), wp)
        i2, j2 = sorted(rng.sample(range(1, p.arity + 1), 2))
        rec.guard("partial associativity (parallel)",
                  lambda: circ(circ(p, i2, b), j2 + b.arity - 1, c) == circ(circ(p, j2, c), i2, b),
                  lambda: {**wp(), "i": i2, "j": j2})

        sigma = gen.random_permutation(rng, m)

        def outer_equiv():
            shuffled = [None] * m
            for k, s in enumerate(sigma):
                shuffled[s] = bs[k]
            lhs = gamma(permute(a, sigma), bs)
            rhs = permute(gamma(a, shuffled), block_permutation(sigma, [x.arity for x in shuffled]))
            return lhs == rhs

        rec.guard("equivariance (outer)", outer_equiv, lambda: {**w(), "sigma": list(sigma)})
        taus = [gen.random_permutation(rng, b.arity) for b in bs]
        rec.guard("equivariance (inner)",
                  lambda: gamma(a, [permute(b, t) for b, t in zip(bs, taus)]) == permute(gamma(a, bs), block_sum(taus)),
                  lambda: {**w(), "taus": _js(taus)})
        rec.guard("json round trip", lambda: CubesConfig.from_json(a.to_json()) == a, w)
    return rec.report


def suite_free(rng: random.Random, trials: Optional[int]) -> SuiteReport:
    rec = Recorder("free-algebra")
    x, y = generator("x"), generator("y")
    rec.check("anchor: mu on generators", apply(MU, [x, y]).word == ("x", "y"))
    rec.check("anchor: unit slot", apply(MU, [x, unit_term()]).shape == AElement.of((0, HALF)))
    rec.check("anchor: apply(1, t) = t", apply(ONE, [x]) == x)
    for _ in range(_n(trials, 500)):
        m = rng.randint(0, 3)
        a = gen.random_a(rng, m)
        bs = [gen.random_a(rng, rng.randint(0, 2)) for _ in range(m)]
        total = sum(b.arity for b in bs)
        ts = [gen.random_term(rng) if rng.random() < 0.8 else unit_term() for _ in range(total)]

        def assoc():
            blocks, k = [], 0
            for b in bs:
                blocks.append(apply(b, ts[k:k + b.arity]))
                k += b.arity
            return apply(gamma(a, bs), ts) == apply(a, blocks)

        rec.guard("apply associativity", assoc, lambda: {"a": a.to_json(), "bs": _js(bs), "terms": _js(ts)})
        rec.check("word length additive",
                  len(apply(gamma(a, bs), ts).word) == sum(len(t.word) for t in ts))
    return rec.report


def suite_interchange(rng: random.Random, trials: Optional[int]) -> SuiteReport:
    rec = Recorder("interchange")
    mu1 = MU.as_config()
    squares = config_from_lists([
        [(0, HALF), (0, HALF)], [(0, HALF), (HALF, 1)], [(HALF, 1), (0, HALF)], [(HALF, 1), (HALF, 1)],
    ])
    rec.check("anchor: rho(mu, mu)", pairing_rho(MU, mu1) == squares)
    rec.check("anchor: rho(a, empty)", pairing_rho(MU, CubesConfig.empty(1)).arity == 0)
    for _ in range(_n(trials, 500)):
        l = rng.randint(0, 3)
        n1 = rng.randint(1, 2)
        m = rng.randint(0, 3)
        a = gen.random_a(rng, l)
        c = gen.random_config(rng, n1, m)
        w = lambda: {"a": a.to_json(), "c": c.to_json()}  # noqa: E731
        n = n1 + 1
        rec.guard("rho = gamma(include(a); rho_1(c), ...)",
                  lambda: pairing_rho(a, c) == gamma(include_dim(a, n), [rho_one(c)] * l), w)
        rec.guard("colex composite agrees up to permutation",
                  lambda: gamma(rho_one(c), [include_dim(a, n)] * m) == permute(pairing_rho(a, c), lex_to_colex(l, m)),
                  w)
    return rec.report


# -- enveloping ------------------------------------------------------------

def suite_enveloping(rng: random.Random, trials: Optional[int]) -> SuiteReport:
    rec = Recorder("enveloping")
    d = env.DPoint(HALF, 1)
    rec.check("anchor: p((1/2,1),(1/4,1/2))",
              env.p(d, env.DPoint(Fraction(1, 4), HALF)).coords() == (Fraction(5, 8), Fraction(3, 4)))
    rec.check("anchor: q((1/2,1),(1/4,1/2))",
              env.q(d, env.DPoint(Fraction(1, 4), HALF)) == AElement.of((0, Fraction(4, 5)), (Fraction(4, 5), 1)))
    rec.check("anchor: decomposition at (1/2,1)", env.d_circ2(d, d) == circ(env.p(d, d).as_a(), 1, env.q(d, d)))
    n = _n(trials, 1000)
    for _ in range(n):
        a, c = gen.random_dpoint(rng), gen.random_dpoint(rng)
        rec.guard("a o2 c = p(a,c) o1 q(a,c)",
                  lambda: env.d_circ2(a, c) == circ(env.p(a, c).as_a(), 1, env.q(a, c)),
                  lambda: {"a": _js(a), "c": _js(c)})
    cases = list(itertools.product((True, False), repeat=3))
    for k in range(_n(trials, 500)):
        flags = cases[k % len(cases)]
        e1, e2, e3 = (gen.random_env(rng, f) for f in flags)
        w = lambda: {"e": _js([e1, e2, e3])}  # noqa: E731
        mul = env.env_multiply
        rec.guard("monoid associativity", lambda: mul(mul(e1, e2), e3) == mul(e1, mul(e2, e3)), w)
        rec.guard("monoid unit", lambda: mul(env.ENV_UNIT, e1) == e1 and mul(e1, env.ENV_UNIT) == e1, w)
        # the multiplication is the A(2)-or-A(3) composite of the underlying elements
        rec.guard("coordinates follow p", lambda: (mul(e1, e2).x, mul(e1, e2).y) == (
            e1.x + (e1.y - e1.x) * e2.x, e1.x + (e1.y - e1.x) * e2.y), w)
    return rec.report


def suite_ur(rng: random.Random, trials: Optional[int]) -> SuiteReport:
    rec = Recorder("enveloping-normalization")
    ex = AElement.of((Fraction(1, 8), Fraction(1, 4)), (HALF, Fraction(3, 4)))
    pt, rest = env.f_m(ex)
    rec.check("anchor: f_1 example",
              pt.coords() == (HALF, Fraction(3, 4)) and rest == AElement.of((Fraction(1, 4), HALF)))
    rec.check("anchor: normalize unit", env.normalize_ur(ONE, []) == env.ENV_UNIT)
    for _ in range(_n(trials, 500)):
        m = rng.randint(0, 4)
        a = gen.random_a(rng, m + 1)
        wa = lambda: {"a": a.to_json()}  # noqa: E731
        rec.guard("f_m then o1 is the identity", lambda: env.recompose(*env.f_m(a)) == a, wa)
        bs = [gen.random_a(rng, rng.randint(0, 2)) for _ in range(m)]

        def square():
            pt, rest = env.f_m(a)
            pt2, rest2 = env.f_m(gamma(a, bs + [ONE]))
            return pt2.coords() == pt.coords() and rest2 == gamma(rest, bs)

        rec.guard("f-square commutes", square, lambda: {**wa(), "bs": _js(bs)})
        labels = [gen.random_term(rng) for _ in range(m)]

        def idem():
            e = env.normalize_ur(a, labels)
            again = env.normalize_ur(e.point().as_a(), [e.label] if e.labelled else [])
            return again == e

        rec.guard("normalization idempotent", idem, lambda: {**wa(), "labels": _js(labels)})
    for _ in range(_n(trials, 200)):
        m1, m2 = rng.randint(0, 3), rng.randint(0, 3)
        a, c = gen.random_a(rng, m1 + 1), gen.random_a(rng, m2 + 1)
        la = [gen.random_term(rng) for _ in range(m1)]
        lc = [gen.random_term(rng) for _ in range(m2)]
        rec.guard("normalization multiplicative",
                  lambda: env.normalize_ur(*env.ur_multiply(a, la, c, lc))
                  == env.env_multiply(env.normalize_ur(a, la), env.normalize_ur(c, lc)),
                  lambda: {"a": a.to_json(), "la": _js(la), "c": c.to_json(), "lc": _js(lc)})
    return rec.report


def suite_homotopy(rng: random.Random, trials: Optional[int]) -> SuiteReport:
    rec = Recorder("homotopies")
    r = generator("r")
    rec.check("anchor: H(1/2, (3/4,1))", env.H(HALF, env.EnvElement(Fraction(3, 4), 1, r)) == env.EnvElement(Fraction(5, 8), 1, r))
    rec.check("anchor: G(1/2, x)", env.G(HALF, r) == apply(AElement.of((0, Fraction(3, 4))), [r]))
    rec.check("anchor: chi psi chi", env.chi(env.psi(env.chi(env.psi(r)))).shape == AElement.of((0, Fraction(1, 4))))
    for _ in range(_n(trials, 500)):
        e = gen.random_env(rng)
        t_term = gen.random_term(rng)
        w = lambda: {"e": e.to_json(), "r": t_term.to_json()}  # noqa: E731
        rec.guard("H(1) = id", lambda: env.H(1, e) == e, w)
        rec.guard("H(0) lands at (1/2, 1)", lambda: (env.H(0, e).x, env.H(0, e).y) == (HALF, 1), w)
        rec.guard("G(1) = id", lambda: env.G(1, t_term) == t_term, w)
        rec.guard("G(0) = chi psi", lambda: env.G(0, t_term) == env.chi(env.psi(t_term)), w)
        for t in T_GRID:
            rec.guard("H inequality (1-t)+td > 1/2+t(c-1/2)",
                      lambda: (1 - t) + t * e.y > HALF + t * (e.x - HALF) and env.H(t, e) is not None,
                      lambda: {**w(), "t": str(t)})
            rec.guard("G_t shape", lambda: env.G(t, t_term).shape == gamma(AElement.of((0, HALF + t / 2)), [t_term.shape]),
                      lambda: {**w(), "t": str(t)})
    return rec.report


def suite_interchange_homotopy(rng: random.Random, trials: Optional[int]) -> SuiteReport:
    rec = Recorder("interchange-homotopy")
    ds = [env.DPoint(HALF, 1), env.DPoint(Fraction(1, 4), HALF)]
    rec.check("anchor: g example", env.g_max_min(ds).coords() == (HALF, Fraction(3, 4)))
    rec.check("anchor: h(1/2) example", [x.coords() for x in env.h(HALF, ds)]
              == [(HALF, Fraction(7, 8)), (Fraction(3, 8), Fraction(5, 8))])
    kinds = ("D", "Dbar", "mixed")
    for k in range(_n(trials, 500)):
        kind = kinds[k % 3]
        m = rng.randint(1, 4)
        if kind == "D":
            cs = [gen.random_dpoint(rng) for _ in range(m)]
        elif kind == "Dbar":
            cs = [gen.random_dbar(rng) for _ in range(m)]
        else:
            cs = [gen.random_point(rng) for _ in range(m)]
        a = gen.random_dpoint(rng)
        d = cs[0]
        w = lambda: {"kind": kind, "a": _js(a), "cs": _js(cs)}  # noqa: E731
        rec.guard(f"g o diag = id ({kind})", lambda: env.g_max_min(env.diag(d, m)) == d, w)
        rec.guard(f"h(1) = id ({kind})", lambda: env.h(1, cs) == cs, w)
        rec.guard(f"h(0) = diag o g ({kind})",
                  lambda: [x.coords() for x in env.h(0, cs)] == [env.g_max_min(cs).coords()] * m, w)
        for t in T_THIRDS:
            wt = lambda: {**w(), "t": str(t)}  # noqa: E731

            def positivity():
                c0, d0 = env.g_max_min(cs).coords()
                return all((1 - t) * (d0 - c0) + t * (di - ci) > 0 for ci, di in (x.coords() for x in cs))

            rec.guard(f"h positivity ({kind})", positivity, wt)
            ht = env.h(t, cs)
            hp = env.h(t, [env.p(a, c) for c in cs])
            rec.guard(f"p-compatibility ({kind})",
                      lambda: all(env.p(a, ht[i]).coords() == hp[i].coords() for i in range(m)), wt)
            rec.guard(f"q-compatibility ({kind})",
                      lambda: all(env.q_break(a, ht[i]) == env.q_from_p(a, hp[i]) for i in range(m)), wt)
    return rec.report


# -- moore -----------------------------------------------------------------

def suite_moore(rng: random.Random, trials: Optional[int]) -> SuiteReport:
    rec = Recorder("moore")
    x, y = generator("x"), generator("y")
    got = moore.c_multiply(moore.CElement(1, 2, 0, x), moore.CElement(3, 1, 2, y))
    rec.check("anchor: C example",
              got == moore.CElement(7, 2, 4, apply(AElement.of((0, Fraction(1, 7)), (Fraction(1, 7), 1)), [x, y])))
    rec.check("anchor: Moore example",
              moore.moore_multiply(moore.MooreElement(2, x), moore.MooreElement(1, y))
              == moore.MooreElement(3, apply(AElement.of((0, Fraction(2, 3)), (Fraction(2, 3), 1)), [x, y])))
    cases = list(itertools.product((True, False), repeat=3))
    mm, cm = moore.moore_multiply, moore.c_multiply
    for k in range(_n(trials, 500)):
        flags = cases[k % len(cases)]
        m1, m2, m3 = (gen.random_moore(rng, f) for f in flags)
        c1, c2, c3 = (gen.random_c(rng, f) for f in flags)
        e1, e2 = gen.random_env(rng, flags[0]), gen.random_env(rng, flags[1])
        wm = lambda: {"m": _js([m1, m2, m3])}  # noqa: E731
        wc = lambda: {"c": _js([c1, c2, c3])}  # noqa: E731
        rec.guard("Moore associativity", lambda: mm(mm(m1, m2), m3) == mm(m1, mm(m2, m3)), wm)
        rec.guard("Moore unit", lambda: mm(moore.MOORE_UNIT, m1) == m1 and mm(m1, moore.MOORE_UNIT) == m1, wm)
        rec.guard("Moore lengths additive", lambda: mm(m1, m2).length == m1.length + m2.length, wm)
        rec.guard("C associativity", lambda: cm(cm(c1, c2), c3) == cm(c1, cm(c2, c3)), wc)
        rec.guard("C unit", lambda: cm(moore.C_UNIT, c1) == c1 and cm(c1, moore.C_UNIT) == c1, wc)
        rec.guard("C total", lambda: cm(c1, c2).total == c1.l1 + c1.l2 * c2.total + c1.l3, wc)
        rec.guard("embed_moore homomorphism",
                  lambda: moore.embed_moore(mm(m1, m2)) == cm(moore.embed_moore(m1), moore.embed_moore(m2)), wm)
        rec.guard("embed_env homomorphism",
                  lambda: moore.embed_env(env.env_multiply(e1, e2)) == cm(moore.embed_env(e1), moore.embed_env(e2)),
                  lambda: {"e": _js([e1, e2])})
        rec.guard("units map to units",
                  lambda: moore.embed_moore(moore.MOORE_UNIT) == moore.C_UNIT and moore.embed_env(env.ENV_UNIT) == moore.C_UNIT)

        def chi_mult():
            total = m1.length + m2.length
            if total == 0:
                return moore.moore_chi(mm(m1, m2)).is_unit
            u = m1.length / total
            expect = env.combine_labels(u, m1.label, m2.label)
            got = moore.moore_chi(mm(m1, m2))
            return got == (unit_term() if expect is None else expect)

        rec.guard("moore_chi multiplicative", chi_mult, wm)
    return rec.report


# -- paths -----------------------------------------------------------------

def _random_loop(rng: random.Random, dim: int, m: int, stops: int) -> paths.PLPath:
    """A random closed PL loop: a valid walk that returns directly if it can, else retraces."""
    kfs = [gen.random_config(rng, dim, m)]
    while len(kfs) <= stops:
        nxt = gen.random_config(rng, dim, m)
        if paths.validate_segment(kfs[-1], nxt).valid:
            kfs.append(nxt)
    if paths.validate_segment(kfs[-1], kfs[0]).valid:
        kfs.append(kfs[0])
    else:
        kfs.extend(reversed(kfs[:-1]))
    return paths.PLPath.through(*kfs)


def suite_paths(rng: random.Random, trials: Optional[int]) -> SuiteReport:
    rec = Recorder("paths")
    a = paths.alpha()
    rec.check("alpha endpoints", a.start == circ(MU, 1, MU).as_config() and a.end == circ(MU, 2, MU).as_config())
    rec.check("eta_l ends at 1", paths.eta_l().end == ONE.as_config())
    rec.check("sigma segments certified", all(paths.validate_segment(x, y).valid for x, y in paths.sigma_braid().segments()))
    rec.check("reverse twice", paths.reverse(paths.reverse(a)) == a)
    for k in range(_n(trials, 100)):
        dim = rng.randint(1, 2)
        m = rng.randint(1, 3)
        loop = _random_loop(rng, dim, m, rng.randint(1, 3))
        w = lambda: {"loop": loop.to_json()}  # noqa: E731
        rec.guard("stabilize_fill certifies random loops", lambda: paths.stabilize_fill(loop).certify() is not None, w)
        const = gen.random_config(rng, dim, rng.randint(0, 2))
        i = rng.randint(1, m)
        t = gen.rand_rat(rng)
        rec.guard("compose_const commutes with evaluation",
                  lambda: paths.compose_const(loop, i, const)(t) == circ(loop(t), i, const),
                  lambda: {**w(), "i": i, "const": const.to_json(), "t": str(t)})
        rec.guard("refine leaves the path unchanged",
                  lambda: paths.refine(loop, [t])(t) == loop(t) and paths.refine(loop, [t])(1 - t) == loop(1 - t), w)
    return rec.report


def _near_tangent(rng: random.Random):
    """Two-cube segments where x-separation ends near the instant y-separation begins.

    Cube 2 sits at [1/2,1]^2.  Cube 1 slides right, losing x-separation at
    ``s_x``, while shrinking from the top, gaining y-separation at 2/3.
    ``graze`` makes the two instants equal (valid, touching at one instant),
    ``sliver`` opens a gap of width ``eps`` and ``overlap`` covers it.
    """
    kind = rng.choice(("graze", "sliver", "overlap"))
    eps = Fraction(1, rng.choice((200, 250, 333, 500)))
    s_x = Fraction(2, 3) + {"graze": 0, "sliver": -eps, "overlap": eps}[kind]
    x1 = Fraction(1, 4) + Fraction(1, 4) / s_x
    start = [[(0, Fraction(1, 4)), (0, 1)], [(HALF, 1), (HALF, 1)]]
    end = [[(x1 - Fraction(1, 4), x1), (0, Fraction(1, 4))], [(HALF, 1), (HALF, 1)]]
    if rng.random() < 0.5:
        start, end = start[::-1], end[::-1]
    if rng.random() < 0.5:
        start = [box[::-1] for box in start]
        end = [box[::-1] for box in end]
    pair = config_from_lists(start), config_from_lists(end)
    return pair if rng.random() < 0.5 else pair[::-1]


def oracle_sampled(c1, c2, samples: int = 1000) -> bool:
    raw1, raw2 = paths._raw(c1), paths._raw(c2)
    for k in range(samples):
        s = Fraction(k, samples - 1)
        box = [[(lo1 + s * (lo2 - lo1), hi1 + s * (hi2 - hi1)) for (lo1, hi1), (lo2, hi2) in zip(b1, b2)]
               for b1, b2 in zip(raw1, raw2)]
        if not paths.config_is_valid(box):
            return False
    return True


def oracle_critical(c1, c2) -> bool:
    """Exact: validity only changes at roots of the separating inequalities."""
    raw1, raw2 = paths._raw(c1), paths._raw(c2)
    crit = {Fraction(0), Fraction(1)}
    m = len(raw1)
    for i, j in itertools.permutations(range(m), 2):
        for k in range(len(raw1[0])):
            f0 = raw1[j][k][0] - raw1[i][k][1]
            f1 = raw2[j][k][0] - raw2[i][k][1]
            if f0 != f1:
                root = f0 / (f0 - f1)
                if 0 < root < 1:
                    crit.add(root)
    pts = sorted(crit)
    probes = pts + [(a + b) / 2 for a, b in zip(pts, pts[1:])]
    for s in probes:
        box = [[(lo1 + s * (lo2 - lo1), hi1 + s * (hi2 - hi1)) for (lo1, hi1), (lo2, hi2) in zip(b1, b2)]
               for b1, b2 in zip(raw1, raw2)]
        if not paths.config_is_valid(box):
            return False
    return True


def _segment_pool(rng: random.Random, count: int):
    out = []
    while len(out) < count:
        if len(out) % 4 == 3:
            out.append(_near_tangent(rng))
            continue
        dim = rng.randint(1, 3)
        m = rng.randint(1, 4)
        out.append((gen.random_config(rng, dim, m), gen.random_config(rng, dim, m)))
    return out


SHIPPED_INVALID = data.load("invalid_path.json")
SHIPPED_INVALID_GAP = paths.Gap(Fraction(3, 4), Fraction(5, 6), False, False)


def suite_validator(rng: random.Random, trials: Optional[int]) -> SuiteReport:
    rec = Recorder("validator")
    mu1 = MU.as_config()
    rec.check("swap in dimension 1 is invalid", not paths.validate_segment(mu1, permute(mu1, (1, 0))).valid)
    k = paths.sigma_braid().keyframes
    rec.check("sigma middle segment is valid", paths.validate_segment(k[1], k[2]).valid)
    kfs = [CubesConfig.from_json(x) for x in SHIPPED_INVALID["keyframes"]]
    found = paths.validate_path(kfs, SHIPPED_INVALID["times"])
    rec.check("shipped invalid example: exact uncovered interval",
              len(found) == 1 and found[0].segment == 1 and found[0].time == SHIPPED_INVALID_GAP,
              lambda: {"found": _js(found)})
    n = _n(trials, 200)
    for c1, c2 in _segment_pool(rng, n):
        w = lambda: {"c1": c1.to_json(), "c2": c2.to_json()}  # noqa: E731
        got = paths.validate_segment(c1, c2)
        rec.check("agrees with 1000-sample oracle", got.valid == oracle_sampled(c1, c2), w)
        rec.check("agrees with critical-point oracle", got.valid == oracle_critical(c1, c2), w)
        if not got.valid:
            mid = got.gap.midpoint()
            rec.check("reported gap is really uncovered",
                      not paths.config_is_valid([[(lo1 + mid * (lo2 - lo1), hi1 + mid * (hi2 - hi1))
                                                  for (lo1, hi1), (lo2, hi2) in zip(b1, b2)]
                                                 for b1, b2 in zip(paths._raw(c1), paths._raw(c2))]), w)
    return rec.report


# -- assemblies and braids -------------------------------------------------

def suite_pentagon(rng: random.Random, trials: Optional[int]) -> SuiteReport:
    rec = Recorder("pentagon")
    loop = paths.assemble_pentagon()
    corners = loop.corners
    rec.check("five edges", len(loop.edges) == 5)
    rec.check("five distinct corners", len(corners) == 5 and len(set(corners)) == 5)
    rec.check("loop closes", loop.as_path().is_closed())
    rec.guard("cone filling certified", lambda: paths.cone_fill(loop).certify()["seams"] > 0)
    rec.guard("stabilized filling certified", lambda: paths.stabilize_fill(loop).certify()["seams"] > 0)
    return rec.report


def suite_triangle(rng: random.Random, trials: Optional[int]) -> SuiteReport:
    rec = Recorder("unit-triangle")
    loop = paths.assemble_unit_triangle()
    names = [e.name for e in loop.edges]
    rec.check("three edges", len(loop.edges) == 3)
    rec.check("arity-dropping alpha edge present", any("alpha" in nme for nme in names), lambda: {"edges": names})
    rec.check("lives in A(2)", loop.as_path().arity == 2 and loop.as_path().dim == 1)
    rec.check("loop closes", loop.as_path().is_closed())
    rec.guard("cone filling certified", lambda: paths.cone_fill(loop).certify()["seams"] > 0)
    return rec.report


def suite_hexagon(rng: random.Random, trials: Optional[int]) -> SuiteReport:
    rec = Recorder("hexagon")
    loop = paths.assemble_hexagon()
    path = loop.as_path()
    word = braids.extract_braid(path)
    rec.check("six edges", len(loop.edges) == 6)
    rec.check("loop closes", path.is_closed())
    rec.check("boundary word is the identity in B_3", braids.is_trivial(word), lambda: {"word": word.to_json()})
    rec.check("braid relation s1 s2 s1 = s2 s1 s2",
              braids.braid_equal(braids.BraidWord(3, (1, 2, 1)), braids.BraidWord(3, (2, 1, 2))))
    rec.check("control: s1 s2 != s2 s1",
              not braids.braid_equal(braids.BraidWord(3, (1, 2)), braids.BraidWord(3, (2, 1))))
    rec.guard("stabilized filling certified", lambda: paths.stabilize_fill(loop).certify()["seams"] > 0)
    return rec.report


def suite_braids(rng: random.Random, trials: Optional[int]) -> SuiteReport:
    rec = Recorder("braids")
    sigma = paths.sigma_braid()
    rec.check("constant path gives the empty word", braids.extract_braid(paths.PLPath.constant(sigma.start)).letters == ())
    rec.check("sigma gives s1", braids.extract_braid(sigma).to_json() == [1])
    rec.check("s1 image", braids.artin_image(braids.BraidWord(2, (1,))) == [(1, 2, -1), (1,)])
    rec.check("s1^2 image of x1", braids.artin_image(braids.BraidWord(2, (1, 1)))[0] == (1, 2, 1, -2, -1))

    # crossing detector against sampled center orderings
    def order_changes(path: paths.PLPath, samples: int = 1000) -> int:
        changes, prev = 0, None
        for k in range(samples):
            cs = [c.center()[0] for c in path(Fraction(k, samples - 1)).cubes]
            now = tuple(sorted(range(len(cs)), key=lambda i: cs[i]))
            if prev is not None and now != prev:
                changes += 1
            prev = now
        return changes

    rec.check("sigma: one ordering change when sampled", order_changes(sigma) == 1)
    for _ in range(_n(trials, 100)):
        letters = tuple(rng.choice((1, -1, 2, -2)) for _ in range(rng.randint(0, 6)))
        more = tuple(rng.choice((1, -1, 2, -2)) for _ in range(rng.randint(0, 6)))
        w1, w2 = braids.BraidWord(3, letters), braids.BraidWord(3, more)
        wj = lambda: {"w1": list(letters), "w2": list(more)}  # noqa: E731
        rec.check("w w^-1 is trivial", braids.is_trivial(w1 * w1.inverse()), wj)
        rec.check("Artin action is multiplicative",
                  braids.artin_image(w1 * w2) == _compose_images(braids.artin_image(w1), braids.artin_image(w2)), wj)
        t = gen.rand_rat(rng)
        rec.check("extraction invariant under refinement",
                  braids.extract_braid(paths.refine(sigma, [t])) == braids.extract_braid(sigma), lambda: {"t": str(t)})
    tau = paths.permute_path(sigma, paths.SWAP)
    both = paths.concat(sigma, tau)
    rec.check("extract respects concatenation",
              braids.braid_equal(braids.extract_braid(both), braids.extract_braid(sigma) * braids.extract_braid(tau)))
    return rec.report


def _compose_images(first: list, second: list) -> list:
    """Images for the product w1 w2: apply w2's images, then substitute w1's."""
    return [braids._substitute(img, first) for img in second]


def suite_symmetry(rng: random.Random, trials: Optional[int]) -> SuiteReport:
    rec = Recorder("symmetry")
    sigma = paths.sigma_braid()
    loop = paths.concat(sigma, paths.permute_path(sigma, paths.SWAP))
    word = braids.extract_braid(loop)
    rec.check("loop closes", loop.is_closed())
    rec.check("word is s1^2", word.to_json() == [1, 1], lambda: {"word": word.to_json()})
    rec.check("s1^2 is not the identity in B_2", not braids.is_trivial(word))
    rec.check("permutation image is trivial", braids.permutation_image(word) == (0, 1))

    def stabilized():
        h = paths.stabilize_fill(loop)
        cert = h.certify()
        return h.grid[0][0].dim == 3 and cert["seams"] > 0 and cert["triangles"] > 0

    rec.guard("stabilize_fill certified in LC_3(2)", stabilized)
    return rec.report


# -- trees -----------------------------------------------------------------

def suite_trees(rng: random.Random, trials: Optional[int]) -> SuiteReport:
    rec = Recorder("trees")
    s2 = trees.star(2)
    g = trees.graft(s2, 1, s2)
    rec.check("graft of stars", g.n == 3 and g.internal_nodes == 2)
    rec.check("graft with the empty tree", trees.graft(s2, 2, None).n == 1)
    pt = trees.TreePoint(g, (MU, MU))
    edge = trees.graft_data(s2, 1, s2).edge
    rec.check("contract mu o1 mu", trees.contract(trees.Contraction(g, {edge}), pt).decorations == (circ(MU, 1, MU),))
    und = trees.graft(s2, 2, None)
    rec.check("undistinguished leaf contracts to mu o2 i",
              trees.evaluate(trees.TreePoint(und, (MU,))) == AElement.of((0, HALF)))
    for n in range(2, 9):
        k = trees.associahedron_faces(n)
        rec.check("associahedron vertices are Catalan", k.f_vector[0] == trees.catalan(n - 1), lambda: {"n": n, "f": k.f_vector})
        rec.check("associahedron Euler characteristic 1", k.euler_characteristic == 1, lambda: {"n": n, "f": k.f_vector})
    rec.check("K(4) is a pentagon", trees.associahedron_faces(4).f_vector == [5, 5, 1])
    rec.check("K(3) is an interval", trees.associahedron_faces(3).f_vector == [2, 1])
    rec.check("shifted K(2) is an interval", trees.associahedron_faces(2, "shifted").f_vector == [2, 1])
    for n in range(1, 5):
        poset = trees.enumerate_Tn(n, n - 1 if n > 1 else 1)
        binary = [t for t in poset.trees if t is not None and set(t.valences) == {2}]
        if n >= 2:
            rec.check("binary trees are Catalan", len(binary) == trees.catalan(n - 1), lambda: {"n": n})
    poset = trees.enumerate_Tn(2, 3, 1)
    rec.check("poset: antisymmetric and transitively closed", _poset_ok(poset))
    report = trees.check_partial_lax_coherence(4, _n(trials, 500), rng.randrange(1 << 30))
    for name, count in sorted(report.checks.items()):
        fails = [f for f in report.failures if f["check"] == name]
        c = rec._get(name)
        c.count += count
        if fails:
            c.failures += len(fails)
            c.witness = fails[0]
    return rec.report


def _poset_ok(poset: trees.TreePoset) -> bool:
    reach = poset.reachable()
    for a, b in itertools.combinations(range(len(poset.trees)), 2):
        if b in reach[a] and a in reach[b]:
            return False
    for k, t in enumerate(poset.trees):
        edges = trees.contractible_edges(t)
        targets = set()
        for r in range(1, len(edges) + 1):
            for sub in itertools.combinations(edges, r):
                targets.add(poset.index(trees.Contraction(t, frozenset(sub)).target))
        if targets != reach[k]:
            return False
    return True


SUITES: dict[str, Callable[[random.Random, Optional[int]], SuiteReport]] = {
    "operad": suite_operad,
    "free-algebra": suite_free,
    "interchange": suite_interchange,
    "enveloping": suite_enveloping,
    "enveloping-normalization": suite_ur,
    "homotopies": suite_homotopy,
    "interchange-homotopy": suite_interchange_homotopy,
    "moore": suite_moore,
    "paths": suite_paths,
    "validator": suite_validator,
    "pentagon": suite_pentagon,
    "unit-triangle": suite_triangle,
    "hexagon": suite_hexagon,
    "braids": suite_braids,
    "symmetry": suite_symmetry,
    "trees": suite_trees,
}


def run_suite(name: str, seed: int, trials: Optional[int]) -> SuiteReport:
    rng = random.Random(f"{seed}:{name}")
    start = time.perf_counter()
    report = SUITES[name](rng, trials)
    report.seconds = time.perf_counter() - start
    return report


def _run_packed(args):
    return run_suite(*args)


def run_suites(names=None, seed: int = 0, trials: Optional[int] = None, jobs: int = 1) -> list[SuiteReport]:
    names = sorted(names or SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown suites: {', '.join(unknown)}")
    work = [(n, seed, trials) for n in names]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_packed, work))
    else:
        reports = [run_suite(*w) for w in work]
    return sorted(reports, key=lambda r: r.suite)
