"""Piecewise-linear paths of cube configurations with exact validity checks.

Along a linear segment between two configurations every cube coordinate is
affine in the segment parameter ``s``.  For a pair of cubes and an axis, the
condition "cube i lies left of cube j" is a single linear inequality in
``s``, so the set of parameters where it holds is a closed interval.  A
segment stays inside LC_n(m) iff, for every pair, the union of these
intervals over axes and both directions covers [0, 1].  The same reasoning
over a triangle gives half-planes, which :func:`validate_triangle` decides
by exact polygon clipping.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .operad import (
    EMPTY_A,
    HALF,
    MU,
    ONE,
    ONE_Q,
    ZERO,
    AElement,
    Cube,
    CubesConfig,
    Element,
    GeometryError,
    Interval,
    circ,
    gamma,
    include_dim,
    is_ordered,
    permute,
    rat,
)


class PathError(ValueError):
    """A path, loop or filling failed exact certification."""

    def __init__(self, message: str, segment: int | None = None, violation=None):
        super().__init__(message)
        self.segment = segment
        self.violation = violation


def _as_config(x: Element) -> CubesConfig:
    return x.as_config() if isinstance(x, AElement) else x


# --------------------------------------------------------------------------
# exact segment and triangle checks


@dataclass(frozen=True)
class Gap:
    """A maximal uncovered parameter interval."""

    lo: Fraction
    hi: Fraction
    lo_closed: bool
    hi_closed: bool

    def contains(self, s: Fraction) -> bool:
        left = s >= self.lo if self.lo_closed else s > self.lo
        right = s <= self.hi if self.hi_closed else s < self.hi
        return left and right

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def to_json(self) -> dict:
        return {"lo": str(self.lo), "hi": str(self.hi), "lo_closed": self.lo_closed, "hi_closed": self.hi_closed}

    def rescale(self, t0: Fraction, t1: Fraction) -> "Gap":
        """The same gap in path time, for a segment running over [t0, t1]."""
        return Gap(t0 + (t1 - t0) * self.lo, t0 + (t1 - t0) * self.hi, self.lo_closed, self.hi_closed)

    def __str__(self):
        return f"{'[' if self.lo_closed else '('}{self.lo}, {self.hi}{']' if self.hi_closed else ')'}"


@dataclass(frozen=True)
class SegmentCheck:
    valid: bool
    pair: Optional[tuple[int, int]] = None
    gap: Optional[Gap] = None
    # per pair: list of (axis, i_before_j, lo, hi) covering intervals
    witnesses: dict = field(default_factory=dict, compare=False, repr=False)

    def to_json(self) -> dict:
        out = {"valid": self.valid}
        if not self.valid:
            out["pair"] = [self.pair[0] + 1, self.pair[1] + 1]
            out["uncovered"] = self.gap.to_json()
        return out


def _linear_nonneg(f0: Fraction, f1: Fraction) -> Optional[tuple[Fraction, Fraction]]:
    """Closed sub-interval of [0,1] where f0 + s (f1 - f0) >= 0, or None."""
    if f0 >= 0 and f1 >= 0:
        return ZERO, ONE_Q
    if f0 < 0 and f1 < 0:
        return None
    root = f0 / (f0 - f1)
    return (ZERO, root) if f0 >= 0 else (root, ONE_Q)


def _gaps(intervals: Iterable[tuple[Fraction, Fraction]]) -> list[Gap]:
    ivs = sorted(intervals)
    if not ivs:
        return [Gap(ZERO, ONE_Q, True, True)]
    gaps = []
    if ivs[0][0] > 0:
        gaps.append(Gap(ZERO, ivs[0][0], True, False))
    reach = ivs[0][1]
    for lo, hi in ivs[1:]:
        if lo > reach:
            gaps.append(Gap(reach, lo, False, False))
        reach = max(reach, hi)
    if reach < 1:
        gaps.append(Gap(reach, ONE_Q, False, True))
    return gaps


def _check_shapes(c1: CubesConfig, c2: CubesConfig):
    if c1.dim != c2.dim or c1.arity != c2.arity:
        raise GeometryError(f"segment endpoints differ in shape: LC{c1.dim}({c1.arity}) vs LC{c2.dim}({c2.arity})")


def validate_segment(c1: Element, c2: Element) -> SegmentCheck:
    """Decide exactly whether the straight segment c1 -> c2 stays in LC_n(m)."""
    c1, c2 = _as_config(c1), _as_config(c2)
    _check_shapes(c1, c2)
    # per-cube nondegeneracy and containment are convex conditions, so they
    # hold on the segment because both endpoints are valid configurations
    witnesses = {}
    for i, j in itertools.combinations(range(c1.arity), 2):
        covers = []
        for k in range(c1.dim):
            a0, b0 = c1.cubes[i].axes[k], c1.cubes[j].axes[k]
            a1, b1 = c2.cubes[i].axes[k], c2.cubes[j].axes[k]
            ij = _linear_nonneg(b0.lo - a0.hi, b1.lo - a1.hi)
            if ij is not None:
                covers.append((k, True, *ij))
            ji = _linear_nonneg(a0.lo - b0.hi, a1.lo - b1.hi)
            if ji is not None:
                covers.append((k, False, *ji))
        gaps = _gaps((lo, hi) for _, _, lo, hi in covers)
        if gaps:
            return SegmentCheck(False, (i, j), gaps[0])
        witnesses[(i, j)] = covers
    return SegmentCheck(True, witnesses=witnesses)


def lerp(c1: Element, c2: Element, s) -> CubesConfig:
    c1, c2 = _as_config(c1), _as_config(c2)
    _check_shapes(c1, c2)
    s = rat(s)
    cubes = []
    for x, y in zip(c1.cubes, c2.cubes):
        cubes.append(Cube(tuple(
            Interval(a.lo + s * (b.lo - a.lo), a.hi + s * (b.hi - a.hi)) for a, b in zip(x.axes, y.axes)
        )))
    return CubesConfig(c1.dim, tuple(cubes))


def config_is_valid(cubes: Sequence[Sequence[tuple[Fraction, Fraction]]]) -> bool:
    """Brute-force validity of raw coordinates (used by the sampling oracle)."""
    for box in cubes:
        for lo, hi in box:
            if not (0 <= lo < hi <= 1):
                return False
    for a, b in itertools.combinations(cubes, 2):
        if not any(x[1] <= y[0] or y[1] <= x[0] for x, y in zip(a, b)):
            return False
    return True


def _raw(c: CubesConfig):
    return [[(iv.lo, iv.hi) for iv in cube.axes] for cube in c.cubes]


def _raw_affine(vertices: Sequence[CubesConfig], weights: Sequence[Fraction]):
    raws = [_raw(v) for v in vertices]
    out = []
    for ci in range(len(raws[0])):
        box = []
        for k in range(len(raws[0][ci])):
            lo = sum(w * r[ci][k][0] for w, r in zip(weights, raws))
            hi = sum(w * r[ci][k][1] for w, r in zip(weights, raws))
            box.append((lo, hi))
        out.append(box)
    return out


def _clip(poly: list[tuple[Fraction, Fraction]], coeffs) -> list[tuple[Fraction, Fraction]]:
    """Keep the part of a convex polygon where c0 + c1 s + c2 t <= 0."""
    c0, c1, c2 = coeffs

    def val(p):
        return c0 + c1 * p[0] + c2 * p[1]

    out = []
    n = len(poly)
    for k in range(n):
        p, q = poly[k], poly[(k + 1) % n]
        vp, vq = val(p), val(q)
        if vp <= 0:
            out.append(p)
        if (vp < 0 < vq) or (vq < 0 < vp):
            lam = vp / (vp - vq)
            out.append((p[0] + lam * (q[0] - p[0]), p[1] + lam * (q[1] - p[1])))
    dedup = []
    for p in out:
        if not dedup or dedup[-1] != p:
            dedup.append(p)
    if len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    return dedup


@dataclass(frozen=True)
class TriangleCheck:
    valid: bool
    pair: Optional[tuple[int, int]] = None
    witness: Optional[tuple[Fraction, Fraction, Fraction]] = None  # barycentric weights


def validate_triangle(c0: Element, c1: Element, c2: Element) -> TriangleCheck:
    """Decide exactly whether the affine triangle spanned by three configurations lies in LC_n(m).

    The triangle is parametrized as ``c0 + s (c1 - c0) + t (c2 - c0)``.  For
    each pair the set of parameters where no axis separates the cubes is the
    intersection of the triangle with open half-planes; it is empty iff the
    clipped closed polygon is empty or its vertex average violates a strict
    inequality.
    """
    cs = [_as_config(c) for c in (c0, c1, c2)]
    _check_shapes(cs[0], cs[1])
    _check_shapes(cs[0], cs[2])
    triangle = [(ZERO, ZERO), (ONE_Q, ZERO), (ZERO, ONE_Q)]
    for i, j in itertools.combinations(range(cs[0].arity), 2):
        # separation conditions f >= 0; uncovered region is all f < 0
        conds = []
        for k in range(cs[0].dim):
            for first, second in ((i, j), (j, i)):
                f = [c.cubes[second].axes[k].lo - c.cubes[first].axes[k].hi for c in cs]
                conds.append((f[0], f[1] - f[0], f[2] - f[0]))
        poly = list(triangle)
        for coeffs in conds:
            poly = _clip(poly, coeffs)
            if not poly:
                break
        if not poly:
            continue
        n = len(poly)
        cs_ = sum(p[0] for p in poly) / n
        ct_ = sum(p[1] for p in poly) / n
        if all(c0_ + c1_ * cs_ + c2_ * ct_ < 0 for c0_, c1_, c2_ in conds):
            return TriangleCheck(False, (i, j), (1 - cs_ - ct_, cs_, ct_))
    return TriangleCheck(True)


# --------------------------------------------------------------------------
# paths


@dataclass(frozen=True)
class PathViolation:
    segment: int
    pair: tuple[int, int]
    local: Gap  # in the segment's own parameter
    time: Gap  # in path time

    def to_json(self) -> dict:
        return {
            "segment": self.segment,
            "pair": [self.pair[0] + 1, self.pair[1] + 1],
            "segment_parameter": self.local.to_json(),
            "time": self.time.to_json(),
        }

    def __str__(self):
        i, j = self.pair
        return (f"segment {self.segment} leaves the configuration space: cubes {i + 1} and {j + 1} "
                f"overlap for t in {self.time} (segment parameter {self.local})")


def validate_path(keyframes: Sequence[Element], times: Sequence) -> list[PathViolation]:
    """Every failing segment of a would-be PL path, without raising."""
    kfs = [_as_config(k) for k in keyframes]
    ts = [rat(t) for t in times]
    if len(kfs) < 2 or len(kfs) != len(ts):
        raise PathError("a path needs at least two keyframes, one time each")
    out = []
    for n, (a, b) in enumerate(zip(kfs, kfs[1:])):
        check = validate_segment(a, b)
        if not check.valid:
            out.append(PathViolation(n, check.pair, check.gap, check.gap.rescale(ts[n], ts[n + 1])))
    return out


@dataclass(frozen=True)
class PLPath:
    """A piecewise-linear path; ``keyframes[k]`` is the configuration at ``times[k]``."""

    keyframes: tuple[CubesConfig, ...]
    times: tuple[Fraction, ...]

    def __post_init__(self):
        kfs = tuple(_as_config(k) for k in self.keyframes)
        times = tuple(rat(t) for t in self.times)
        object.__setattr__(self, "keyframes", kfs)
        object.__setattr__(self, "times", times)
        if len(kfs) < 2 or len(kfs) != len(times):
            raise PathError("a path needs at least two keyframes, one time each")
        if times[0] != 0 or times[-1] != 1 or any(a >= b for a, b in zip(times, times[1:])):
            raise PathError(f"times must increase strictly from 0 to 1: {[str(t) for t in times]}")
        for k in kfs[1:]:
            _check_shapes(kfs[0], k)
        for n, (a, b) in enumerate(zip(kfs, kfs[1:])):
            check = validate_segment(a, b)
            if not check.valid:
                v = PathViolation(n, check.pair, check.gap, check.gap.rescale(times[n], times[n + 1]))
                raise PathError(str(v), segment=n, violation=v)

    @classmethod
    def through(cls, *keyframes: Element) -> "PLPath":
        """Evenly timed path through the given keyframes."""
        n = len(keyframes) - 1
        return cls(tuple(keyframes), tuple(Fraction(k, n) for k in range(n + 1)))

    @classmethod
    def constant(cls, c: Element) -> "PLPath":
        return cls((c, c), (ZERO, ONE_Q))

    @property
    def dim(self) -> int:
        return self.keyframes[0].dim

    @property
    def arity(self) -> int:
        return self.keyframes[0].arity

    @property
    def start(self) -> CubesConfig:
        return self.keyframes[0]

    @property
    def end(self) -> CubesConfig:
        return self.keyframes[-1]

    def is_constant(self) -> bool:
        return all(k == self.keyframes[0] for k in self.keyframes)

    def is_closed(self) -> bool:
        return self.start == self.end

    def segments(self):
        return list(zip(self.keyframes, self.keyframes[1:]))

    def __call__(self, t) -> CubesConfig:
        t = rat(t)
        if not 0 <= t <= 1:
            raise ValueError(f"path parameter {t} outside [0,1]")
        for k in range(len(self.times) - 1):
            t0, t1 = self.times[k], self.times[k + 1]
            if t <= t1:
                return lerp(self.keyframes[k], self.keyframes[k + 1], (t - t0) / (t1 - t0))
        return self.end

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "arity": self.arity,
            "times": [str(t) for t in self.times],
            "keyframes": [k.to_json() for k in self.keyframes],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PLPath":
        path = cls(
            tuple(CubesConfig.from_json(k) for k in data["keyframes"]),
            tuple(rat(t) for t in data["times"]),
        )
        if "dim" in data and int(data["dim"]) != path.dim:
            raise PathError(f"declared dim {data['dim']} but keyframes have dim {path.dim}")
        if "arity" in data and int(data["arity"]) != path.arity:
            raise PathError(f"declared arity {data['arity']} but keyframes have arity {path.arity}")
        return path


def map_keyframes(path: PLPath, fn) -> PLPath:
    return PLPath(tuple(fn(k) for k in path.keyframes), path.times)


def reverse(path: PLPath) -> PLPath:
    return PLPath(tuple(reversed(path.keyframes)), tuple(1 - t for t in reversed(path.times)))


def concat(*paths: PLPath) -> PLPath:
    """Time-rescaled concatenation; each path gets an equal share of [0,1]."""
    if not paths:
        raise PathError("nothing to concatenate")
    n = len(paths)
    kfs: list[CubesConfig] = []
    times: list[Fraction] = []
    for k, p in enumerate(paths):
        if k and p.start != paths[k - 1].end:
            raise PathError(f"path {k} starts at {p.start} but path {k - 1} ends at {paths[k - 1].end}")
        offset = Fraction(k, n)
        for j, (c, t) in enumerate(zip(p.keyframes, p.times)):
            if k and j == 0:
                continue
            kfs.append(c)
            times.append(offset + t / n)
    return PLPath(tuple(kfs), tuple(times))


def refine(path: PLPath, extra_times: Iterable) -> PLPath:
    """Insert interpolated keyframes at the given times; the path is unchanged."""
    ts = sorted(set(path.times) | {rat(t) for t in extra_times})
    return PLPath(tuple(path(t) for t in ts), tuple(ts))


def permute_path(path: PLPath, sigma: Sequence[int]) -> PLPath:
    return map_keyframes(path, lambda c: permute(c, sigma))


def include_path(path: PLPath, target: int) -> PLPath:
    return map_keyframes(path, lambda c: include_dim(c, target))


def _const_config(x) -> CubesConfig:
    if isinstance(x, PLPath):
        if not x.is_constant():
            raise PathError(
                "path o path composition is not piecewise linear; compose one path with constants"
            )
        return x.start
    return _as_config(x)


def compose_const(path: PLPath, i: int, const, side: str = "outer") -> PLPath:
    """Keyframewise partial composition of a path with a constant element.

    ``side="outer"`` gives ``path o_i const``; ``side="inner"`` gives
    ``const o_i path``.
    """
    c = _const_config(const)
    if side == "outer":
        return map_keyframes(path, lambda k: circ(k, i, c))
    if side == "inner":
        return map_keyframes(path, lambda k: circ(c, i, k))
    raise ValueError(f"side must be 'outer' or 'inner', not {side!r}")


def gamma_path(path: PLPath, inners: Sequence) -> PLPath:
    """``path o (c_1, ..., c_m)`` with constant inputs (arity-0 inputs drop slots)."""
    cs = [_const_config(c) for c in inners]
    return map_keyframes(path, lambda k: gamma(k, cs))


# --------------------------------------------------------------------------
# named elements and paths


def mu_config(dim: int = 1) -> CubesConfig:
    return include_dim(MU, dim)


MU_L0 = AElement.of((HALF, 1))
MU_R0 = AElement.of((0, HALF))


def alpha() -> PLPath:
    """Linear path in A(3) from mu o_1 mu to mu o_2 mu."""
    return PLPath.through(circ(MU, 1, MU), circ(MU, 2, MU))


def eta_l() -> PLPath:
    return PLPath.through(MU_L0, ONE)


def eta_r() -> PLPath:
    return PLPath.through(MU_R0, ONE)


def sigma_braid() -> PLPath:
    """Path in LC_2(2) from mu to mu tau.

    Cube 1 drops to the lower half, cube 2 rises to the upper half, they
    slide past each other horizontally, then regain full height.
    """
    q = Fraction(1, 2)
    k0 = CubesConfig.from_intervals([(0, q), (0, 1)], [(q, 1), (0, 1)])
    k1 = CubesConfig.from_intervals([(0, q), (0, q)], [(q, 1), (q, 1)])
    k2 = CubesConfig.from_intervals([(q, 1), (0, q)], [(0, q), (q, 1)])
    k3 = CubesConfig.from_intervals([(q, 1), (0, 1)], [(0, q), (0, 1)])
    return PLPath.through(k0, k1, k2, k3)


SWAP = (1, 0)


# --------------------------------------------------------------------------
# loops


@dataclass(frozen=True)
class LoopEdge:
    name: str
    path: PLPath  # already oriented and relabelled
    forward: bool
    relabel: tuple[int, ...]


@dataclass(frozen=True)
class LoopSpec:
    edges: tuple[LoopEdge, ...]

    def __post_init__(self):
        for k, e in enumerate(self.edges):
            nxt = self.edges[(k + 1) % len(self.edges)]
            if e.path.end != nxt.path.start:
                raise PathError(f"edge {e.name} ends at {e.path.end}, but {nxt.name} starts at {nxt.path.start}")

    @property
    def corners(self) -> list[CubesConfig]:
        return [e.path.start for e in self.edges]

    def as_path(self) -> PLPath:
        return concat(*(e.path for e in self.edges))

    def describe(self) -> list[str]:
        out = []
        for e in self.edges:
            s = e.name if e.forward else f"{e.name}^-1"
            if e.relabel != tuple(range(len(e.relabel))):
                s += f" relabelled {[x + 1 for x in e.relabel]}"
            out.append(s)
        return out


def assemble_loop(edges: Sequence[tuple], relabel: bool = False,
                  ordered: bool = False) -> LoopSpec:
    """Find the unique closed cycle through every edge.

    Edges are ``(name, path)`` or ``(name, path, forward)``; a ``forward``
    of True/False pins the traversal direction.  Otherwise each edge may be
    traversed in either direction and, when ``relabel`` is
    set, under any relabelling of its cubes.  The first edge is fixed
    forward and unrelabelled, which picks the traversal direction.  Edges
    with the same name are interchangeable.  With ``ordered`` the edges are
    traversed in the given boundary order.  Anything other than exactly one
    cycle is an error.
    """
    if not edges:
        raise PathError("no edges")
    arity = edges[0][1].arity
    perms = list(itertools.permutations(range(arity))) if relabel else [tuple(range(arity))]

    edges = [(e[0], e[1], e[2] if len(e) > 2 else None) for e in edges]
    variants = []
    for name, path, pinned in edges:
        opts = []
        for perm in perms:
            p = permute_path(path, perm) if relabel else path
            if pinned in (None, True):
                opts.append((True, perm, p))
            if pinned in (None, False):
                opts.append((False, perm, reverse(p)))
        variants.append((name, opts))

    first_name, first_path, pinned = edges[0]
    if pinned is False:
        first_path = reverse(first_path)
    start_edge = LoopEdge(first_name, first_path, pinned is not False, tuple(range(arity)))
    solutions: set[tuple] = set()
    found: dict[tuple, list[LoopEdge]] = {}

    def dfs(chain: list[LoopEdge], used: frozenset):
        here = chain[-1].path.end
        if len(used) == len(edges):
            if here == chain[0].path.start:
                key = tuple((e.name, e.forward, e.relabel) for e in chain)
                solutions.add(key)
                found[key] = list(chain)
            return
        tried_names = set()
        for idx, (name, opts) in enumerate(variants):
            if idx in used or name in tried_names or (ordered and idx != len(chain)):
                continue
            tried_names.add(name)
            for fwd, perm, p in opts:
                if p.start == here:
                    dfs(chain + [LoopEdge(name, p, fwd, perm)], used | {idx})

    dfs([start_edge], frozenset({0}))
    if not solutions:
        raise PathError("the edges do not close up into a loop: " + ", ".join(e[0] for e in edges))
    if len(solutions) > 1:
        raise PathError(f"ambiguous loop: {len(solutions)} consistent cycles")
    (key,) = solutions
    return LoopSpec(tuple(found[key]))


def _check_alpha(a: PLPath | None) -> PLPath:
    if a is None:
        return alpha()
    if a.dim != 1 or a.arity != 3:
        raise PathError(f"alpha must be a path in A(3), got dim {a.dim}, arity {a.arity}")
    if a.start != circ(MU, 1, MU).as_config() or a.end != circ(MU, 2, MU).as_config():
        raise PathError(f"alpha must run from mu o1 mu to mu o2 mu, got {a.start} -> {a.end}")
    return a


def pentagon_edges(alpha_path: PLPath | None = None) -> list[tuple[str, PLPath]]:
    a = _check_alpha(alpha_path)
    return [
        ("alpha o1 mu", compose_const(a, 1, MU, "outer")),
        ("mu o1 alpha", compose_const(a, 1, MU, "inner")),
        ("alpha o2 mu", compose_const(a, 2, MU, "outer")),
        ("mu o2 alpha", compose_const(a, 2, MU, "inner")),
        ("alpha o3 mu", compose_const(a, 3, MU, "outer")),
    ]


def assemble_pentagon(alpha_path: PLPath | None = None) -> LoopSpec:
    loop = assemble_loop(pentagon_edges(alpha_path))
    corners = loop.corners
    if len(set(corners)) != 5:
        raise PathError(f"pentagon corners are not distinct: {corners}")
    return loop


def unit_triangle_edges(alpha_path: PLPath | None = None) -> list[tuple[str, PLPath]]:
    a = _check_alpha(alpha_path)
    return [
        ("mu o2 eta_l", compose_const(eta_l(), 2, MU, "inner")),
        ("mu o1 eta_r", compose_const(eta_r(), 1, MU, "inner")),
        ("alpha o (1,i,1)", gamma_path(a, [ONE, EMPTY_A, ONE])),
    ]


def assemble_unit_triangle(alpha_path: PLPath | None = None) -> LoopSpec:
    return assemble_loop(unit_triangle_edges(alpha_path))


def hexagon_edges(sigma: PLPath | None = None, alpha_path: PLPath | None = None,
                  sigma_slot: int = 2) -> list[tuple]:
    """Edges of the braid hexagon in LC_2(3), in boundary order.

    The two braidings on the upper boundary are traversed forward; the
    orientations of the associators and the fifth edge are left to the
    assembler.  ``sigma_slot`` selects which slot of sigma receives mu in
    the fifth edge.
    """
    s = sigma_braid() if sigma is None else sigma
    a = alpha() if alpha_path is None else alpha_path
    m2 = mu_config(2)
    if s.dim != 2 or s.arity != 2:
        raise PathError("sigma must be a path in LC_2(2)")
    if s.start != m2 or s.end != permute(m2, SWAP):
        raise PathError(f"sigma must run from mu to mu tau, got {s.start} -> {s.end}")
    if a.arity != 3 or a.dim > 2:
        raise PathError("alpha must be a path in LC_1(3) or LC_2(3)")
    a2 = include_path(a, 2)
    if a2.start != include_dim(circ(MU, 1, MU), 2) or a2.end != include_dim(circ(MU, 2, MU), 2):
        raise PathError("alpha must run from mu o1 mu to mu o2 mu")
    return [
        ("mu o1 sigma", compose_const(s, 1, m2, "inner"), True),
        ("alpha", a2),
        ("mu o2 sigma", compose_const(s, 2, m2, "inner"), True),
        ("alpha", a2),
        (f"sigma o{sigma_slot} mu", compose_const(s, sigma_slot, m2, "outer")),
        ("alpha", a2),
    ]


def assemble_hexagon(sigma: PLPath | None = None, alpha_path: PLPath | None = None,
                     sigma_slot: int = 2) -> LoopSpec:
    return assemble_loop(hexagon_edges(sigma, alpha_path, sigma_slot), relabel=True, ordered=True)


# --------------------------------------------------------------------------
# fillings


@dataclass(frozen=True)
class Filling:
    apex: CubesConfig
    rim: tuple[CubesConfig, ...]  # closed cyclic list of loop keyframes

    @property
    def triangles(self) -> list[tuple[CubesConfig, CubesConfig, CubesConfig]]:
        return [(self.apex, a, b) for a, b in zip(self.rim, self.rim[1:])]

    def certify(self) -> dict:
        """Re-check every seam and every triangle exactly; raise on failure."""
        seams = 0
        for n, (a, b) in enumerate(zip(self.rim, self.rim[1:])):
            for x, y in ((self.apex, a), (a, b)):
                chk = validate_segment(x, y)
                if not chk.valid:
                    raise PathError(f"filling seam at rim segment {n} fails on {chk.gap}", n, chk)
                seams += 1
        for n, tri in enumerate(self.triangles):
            chk = validate_triangle(*tri)
            if not chk.valid:
                raise PathError(f"filling triangle {n} leaves the configuration space", n, chk)
        return {"seams": seams, "triangles": len(self.triangles)}


def _dedup_cycle(kfs: Sequence[CubesConfig]) -> list[CubesConfig]:
    out = []
    for k in kfs:
        if not out or out[-1] != k:
            out.append(k)
    return out


def average(configs: Sequence[CubesConfig]) -> CubesConfig:
    n = len(configs)
    first = configs[0]
    cubes = []
    for ci in range(first.arity):
        axes = []
        for k in range(first.dim):
            lo = sum(c.cubes[ci].axes[k].lo for c in configs) / n
            hi = sum(c.cubes[ci].axes[k].hi for c in configs) / n
            axes.append(Interval(lo, hi))
        cubes.append(Cube(tuple(axes)))
    return CubesConfig(first.dim, tuple(cubes))


def cone_fill(loop: LoopSpec | PLPath) -> Filling:
    """Cone a loop in A(k) off the average of its corners.

    Ordered interval configurations form a convex region, so every cone
    triangle stays inside; the filling is nevertheless re-certified.
    """
    path = loop.as_path() if isinstance(loop, LoopSpec) else loop
    if not path.is_closed():
        raise PathError("cone_fill needs a closed loop")
    rim = _dedup_cycle(path.keyframes)
    for k in rim:
        if not is_ordered(k):
            raise PathError(f"{k} is not in A({k.arity}); cone filling needs a single A(k) component")
    corners = loop.corners if isinstance(loop, LoopSpec) else rim[:-1] or rim
    filling = Filling(average(corners), tuple(rim))
    filling.certify()
    return filling


@dataclass(frozen=True)
class NullHomotopy:
    """A PL map of the square into LC_{n+1}(m) contracting a loop.

    ``grid[r][c]`` is the configuration at homotopy stage ``stages[r]`` and
    loop time ``times[c]``.  Each grid square is split along its diagonal
    into two affine triangles.  Row 0 is the stabilized loop, the last row
    is constant, and the first and last columns are the same (the loop's
    base point), so the map is a null homotopy relative to the base point
    track.
    """

    stages: tuple[Fraction, ...]
    times: tuple[Fraction, ...]
    grid: tuple[tuple[CubesConfig, ...], ...]

    def certify(self) -> dict:
        seams = triangles = 0
        rows, cols = len(self.grid), len(self.times)
        for r in range(rows):
            for c in range(cols - 1):
                chk = validate_segment(self.grid[r][c], self.grid[r][c + 1])
                if not chk.valid:
                    raise PathError(f"row {r} segment {c} fails on {chk.gap}", c, chk)
                seams += 1
        for r in range(rows - 1):
            for c in range(cols):
                chk = validate_segment(self.grid[r][c], self.grid[r + 1][c])
                if not chk.valid:
                    raise PathError(f"column {c} stage {r} fails on {chk.gap}", c, chk)
                seams += 1
            for c in range(cols - 1):
                a, b = self.grid[r][c], self.grid[r][c + 1]
                x, y = self.grid[r + 1][c], self.grid[r + 1][c + 1]
                for tri in ((a, b, y), (a, x, y)):
                    chk = validate_segment(tri[0], tri[2])
                    if not chk.valid:
                        raise PathError(f"diagonal at stage {r}, segment {c} fails", c, chk)
                    tc = validate_triangle(*tri)
                    if not tc.valid:
                        raise PathError(f"triangle at stage {r}, segment {c} leaves the space", c, tc)
                    triangles += 1
                seams += 1
        last = self.grid[-1]
        if any(k != last[0] for k in last):
            raise PathError("final stage is not constant")
        for row in self.grid:
            if row[0] != row[-1]:
                raise PathError("rows are not closed loops")
        return {"seams": seams, "triangles": triangles}


def _slab_config(c: CubesConfig, fraction: Fraction) -> CubesConfig:
    """Move each cube's last axis from [0,1] toward its slab by ``fraction``."""
    m = c.arity
    cubes = []
    for j, cube in enumerate(c.cubes):
        lo = fraction * Fraction(j, m)
        hi = 1 + fraction * (Fraction(j + 1, m) - 1)
        cubes.append(Cube(cube.axes[:-1] + (Interval(lo, hi),)))
    return CubesConfig(c.dim, tuple(cubes))


def stabilize_fill(loop: PLPath | LoopSpec) -> NullHomotopy:
    """Contract a loop in LC_n(m) inside LC_{n+1}(m).

    Stage 1 squeezes cube j into the slab [(j-1)/m, j/m] of the new axis,
    which only shrinks cubes.  Stage 2, with the slabs pairwise disjoint,
    moves the old axes linearly to the base point.
    """
    path = loop.as_path() if isinstance(loop, LoopSpec) else loop
    if not path.is_closed():
        raise PathError("stabilize_fill needs a closed loop")
    n = path.dim
    lifted = [include_dim(k, n + 1) for k in path.keyframes]
    squeezed = [_slab_config(k, ONE_Q) for k in lifted]
    base = squeezed[0]
    contracted = [base] * len(squeezed)
    grid = (tuple(lifted), tuple(squeezed), tuple(contracted))
    h = NullHomotopy((ZERO, HALF, ONE_Q), path.times, grid)
    h.certify()
    return h
