"""Seeded random inputs over bounded-denominator rationals.

Every generator takes a ``random.Random`` instance, so a single seed fixes an
entire run.  Denominators stay at or below ``max_den`` (64 by default) which
keeps exact arithmetic cheap even after several compositions.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional, Sequence

from .enveloping import DBarPoint, DPoint, EnvElement
from .free_algebra import Term, apply, gen
from .moore import CElement, MooreElement
from .operad import AElement, Cube, CubesConfig, Interval, permute

MAX_DEN = 64
NAMES = ("r", "s", "t", "u")


def make_rng(seed: int) -> random.Random:
    return random.Random(seed)


def rand_rat(rng: random.Random, lo=0, hi=1, max_den: int = MAX_DEN, open_lo=False, open_hi=False) -> Fraction:
    lo, hi = Fraction(lo), Fraction(hi)
    while True:
        d = rng.randint(1, max_den)
        a = -(-lo.numerator * d // lo.denominator)  # ceil(lo * d)
        b = hi.numerator * d // hi.denominator
        if a > b:
            continue
        x = Fraction(rng.randint(a, b), d)
        if (open_lo and x == lo) or (open_hi and x == hi):
            continue
        return x


def _grid_points(rng: random.Random, count: int, max_den: int) -> tuple[int, list[int]]:
    d = rng.randint(max(count - 1, 1), max(count - 1, max_den))
    return d, sorted(rng.sample(range(d + 1), count))


def random_a(rng: random.Random, k: int, max_den: int = MAX_DEN, touch: float = 0.3) -> AElement:
    """k ordered intervals; adjacent ones abut with probability ``touch``."""
    if k == 0:
        return AElement(())
    d, pts = _grid_points(rng, 2 * k, max_den)
    pts = [Fraction(x, d) for x in pts]
    for i in range(1, k):
        if rng.random() < touch:
            pts[2 * i] = pts[2 * i - 1]
    return AElement(tuple(Interval(pts[2 * i], pts[2 * i + 1]) for i in range(k)))


def random_permutation(rng: random.Random, k: int) -> tuple[int, ...]:
    perm = list(range(k))
    rng.shuffle(perm)
    return tuple(perm)


def _guillotine(rng: random.Random, box: list[tuple[Fraction, Fraction]], k: int, grid: int):
    if k == 1:
        return [box]
    wide = [ax for ax, (lo, hi) in enumerate(box) if (hi - lo) * grid >= k]
    if not wide:
        raise ValueError(f"a 1/{grid} grid cannot hold {k} cubes here")
    axis = rng.choice(wide)
    lo, hi = box[axis]
    a, b = int(lo * grid), int(hi * grid)
    left = rng.randint(1, k - 1)
    cut = Fraction(rng.randint(a + left, b - (k - left)), grid)
    first = list(box)
    second = list(box)
    first[axis] = (lo, cut)
    second[axis] = (cut, hi)
    return _guillotine(rng, first, left, grid) + _guillotine(rng, second, k - left, grid)


def random_config(rng: random.Random, dim: int, k: int, max_den: int = MAX_DEN, shrink: float = 0.5) -> CubesConfig:
    """Random labelled configuration: guillotine cells on a 1/max_den grid, some shrunk, shuffled."""
    if k == 0:
        return CubesConfig.empty(dim)
    one = (Fraction(0), Fraction(1))
    cells = _guillotine(rng, [one] * dim, k, max_den)
    cubes = []
    for cell in cells:
        axes = []
        for lo, hi in cell:
            if rng.random() < shrink:
                a, b = sorted(rng.sample(range(max_den + 1), 2))
                span = hi - lo
                lo, hi = lo + span * Fraction(a, max_den), lo + span * Fraction(b, max_den)
            axes.append(Interval(lo, hi))
        cubes.append(Cube(tuple(axes)))
    config = CubesConfig(dim, tuple(cubes))
    return permute(config, random_permutation(rng, k))


def random_dpoint(rng: random.Random, max_den: int = MAX_DEN) -> DPoint:
    d, (a, b) = _grid_points(rng, 2, max_den)
    if a == 0:
        a, b = (a + 1, b) if b > 1 else (1, 2)
        d = max(d, b)
    return DPoint(Fraction(a, d), Fraction(b, d))


def random_dbar(rng: random.Random, max_den: int = MAX_DEN) -> DBarPoint:
    d, (a, b) = _grid_points(rng, 2, max_den)
    return DBarPoint(Fraction(a, d), Fraction(b, d))


def random_point(rng: random.Random, max_den: int = MAX_DEN):
    return random_dpoint(rng, max_den) if rng.random() < 0.7 else random_dbar(rng, max_den)


def random_term(rng: random.Random, max_len: int = 3, names: Sequence[str] = NAMES,
                max_den: int = MAX_DEN) -> Term:
    k = rng.randint(1, max_len)
    word = [gen(rng.choice(names)) for _ in range(k)]
    return apply(random_a(rng, k, max_den), word)


def random_env(rng: random.Random, labelled: Optional[bool] = None, max_den: int = MAX_DEN) -> EnvElement:
    if labelled is None:
        labelled = rng.random() < 0.6
    if labelled:
        pt = random_dpoint(rng, max_den)
        return EnvElement(pt.a, pt.b, random_term(rng, max_den=max_den))
    pt = random_dbar(rng, max_den)
    return EnvElement(pt.x, pt.y)


def random_moore(rng: random.Random, labelled: Optional[bool] = None, max_den: int = MAX_DEN) -> MooreElement:
    if labelled is None:
        labelled = rng.random() < 0.6
    if labelled:
        return MooreElement(rand_rat(rng, 0, 4, max_den, open_lo=True), random_term(rng, max_den=max_den))
    length = Fraction(0) if rng.random() < 0.2 else rand_rat(rng, 0, 4, max_den)
    return MooreElement(length)


def random_c(rng: random.Random, labelled: Optional[bool] = None, max_den: int = MAX_DEN) -> CElement:
    if labelled is None:
        labelled = rng.random() < 0.6
    l2 = rand_rat(rng, 0, 2, max_den, open_lo=True)
    l3 = rand_rat(rng, 0, 2, max_den)
    if labelled:
        return CElement(rand_rat(rng, 0, 2, max_den, open_lo=True), l2, l3, random_term(rng, max_den=max_den))
    l1 = Fraction(0) if rng.random() < 0.3 else rand_rat(rng, 0, 2, max_den)
    return CElement(l1, l2, l3)
