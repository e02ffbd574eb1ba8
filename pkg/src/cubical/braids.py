"""Braid words read off paths in LC_2(k), compared through the Artin action.

Strand ``i`` of a path in LC_2(k) is the center of cube ``i``.  A letter is
emitted each time two strands exchange their order along the first axis.
Sign convention: the letter is positive when the strand that starts on the
left has the smaller second-axis center at the moment of crossing.

Free-group words are tuples of nonzero ints, ``+j`` for x_j and ``-j`` for
its inverse (1-based).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .paths import PLPath, PathError

FreeWord = tuple[int, ...]


class DegenerateCrossing(PathError):
    """Strand centers tie in a way that does not define a braid letter."""


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...]  # signed 1-based generator indices

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise ValueError(f"generator {x} out of range for B_{self.strands}")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise ValueError("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def to_json(self) -> list[int]:
        return list(self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"s{abs(x)}" + ("" if x > 0 else "^-1") for x in self.letters)


def free_reduce(word: Sequence[int]) -> FreeWord:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def free_inverse(word: FreeWord) -> FreeWord:
    return tuple(-x for x in reversed(word))


def _substitute(word: FreeWord, images: Sequence[FreeWord]) -> FreeWord:
    out: list[int] = []
    for x in word:
        out.extend(images[x - 1] if x > 0 else free_inverse(images[-x - 1]))
    return free_reduce(out)


def _generator_images(k: int, letter: int) -> list[FreeWord]:
    i = abs(letter)
    images = [(j,) for j in range(1, k + 1)]
    if letter > 0:
        images[i - 1] = (i, i + 1, -i)
        images[i] = (i,)
    else:
        images[i - 1] = (i + 1,)
        images[i] = (-(i + 1), i, i + 1)
    return images


def artin_image(w: BraidWord) -> list[FreeWord]:
    """Images of x_1..x_k under the automorphism of the word (leftmost letter applied last)."""
    images: list[FreeWord] = [(j,) for j in range(1, w.strands + 1)]
    for letter in w.letters:
        gen = _generator_images(w.strands, letter)
        images = [_substitute(g, images) for g in gen]
    return images


def braid_equal(w1: BraidWord, w2: BraidWord) -> bool:
    if w1.strands != w2.strands:
        raise ValueError(f"cannot compare B_{w1.strands} with B_{w2.strands}")
    return artin_image(w1) == artin_image(w2)


def is_trivial(w: BraidWord) -> bool:
    return braid_equal(w, BraidWord(w.strands, ()))


def permutation_image(w: BraidWord) -> tuple[int, ...]:
    """Underlying permutation: entry ``p`` is the strand that ends in position ``p`` (0-based)."""
    order = list(range(w.strands))
    for x in w.letters:
        i = abs(x) - 1
        order[i], order[i + 1] = order[i + 1], order[i]
    return tuple(order)


def _centers(path: PLPath):
    return [[c.center() for c in k.cubes] for k in path.keyframes]


def extract_braid(path: PLPath) -> BraidWord:
    """Read the braid word of a path in LC_2(k)."""
    if path.dim != 2:
        raise ValueError(f"braid extraction needs dimension 2, got {path.dim}")
    k = path.arity
    centers = _centers(path)
    times = path.times
    nseg = len(times) - 1

    def xdiff(i, j, kf):
        return centers[kf][i][0] - centers[kf][j][0]

    # every event is a (segment, local parameter) where some pair ties in x
    events: set[Fraction] = set()
    for i in range(k):
        for j in range(i + 1, k):
            for s in range(nseg):
                f0, f1 = xdiff(i, j, s), xdiff(i, j, s + 1)
                if f0 == 0 and f1 == 0:
                    raise DegenerateCrossing(
                        f"strands {i + 1} and {j + 1} share a first-axis center along segment {s}", segment=s)
                if f0 == 0:
                    events.add(times[s])
                elif f1 == 0:
                    events.add(times[s + 1])
                elif (f0 < 0) != (f1 < 0):
                    events.add(times[s] + (times[s + 1] - times[s]) * f0 / (f0 - f1))

    def at(t: Fraction):
        c = path(t)
        return [cube.center() for cube in c.cubes]

    start = at(Fraction(0))
    xs = [p[0] for p in start]
    if len(set(xs)) != k:
        raise DegenerateCrossing("strands start with tied first-axis centers", segment=0)
    order = sorted(range(k), key=lambda s: xs[s])

    ev = sorted(events)
    probes = [Fraction(0)] + ev + [Fraction(1)]
    letters: list[int] = []
    for n, t in enumerate(ev):
        before = at((probes[n] + t) / 2)
        after = at((t + probes[n + 2]) / 2)
        now = at(t)
        tied = [(a, b) for a in range(k) for b in range(a + 1, k) if now[a][0] == now[b][0]]
        crossing = []
        for a, b in tied:
            sb = before[a][0] < before[b][0]
            sa = after[a][0] < after[b][0]
            if now[a][1] == now[b][1]:
                raise DegenerateCrossing(f"strands {a + 1} and {b + 1} collide at t={t}")
            if sb != sa:
                crossing.append((a, b))
            elif t not in (0, 1):
                raise DegenerateCrossing(f"strands {a + 1} and {b + 1} touch without crossing at t={t}")
        used = [s for pair in crossing for s in pair]
        if len(used) != len(set(used)):
            raise DegenerateCrossing(f"more than two strands meet at t={t}")
        moves = []
        for a, b in crossing:
            pa, pb = order.index(a), order.index(b)
            left, right = (a, b) if pa < pb else (b, a)
            lo = min(pa, pb)
            if abs(pa - pb) != 1:
                raise DegenerateCrossing(f"strands {a + 1} and {b + 1} are not adjacent when crossing at t={t}")
            sign = 1 if now[left][1] < now[right][1] else -1
            moves.append((lo, sign))
        for lo, sign in sorted(moves):
            letters.append(sign * (lo + 1))
            order[lo], order[lo + 1] = order[lo + 1], order[lo]
        if t in (0, 1) and crossing:
            raise DegenerateCrossing(f"crossing at the path endpoint t={t}")
    return BraidWord(k, tuple(letters))
