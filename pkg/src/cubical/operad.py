"""Exact little cubes operads.

Coordinates are :class:`fractions.Fraction` values throughout; floats are
rejected at every entry point.  A configuration stores its cubes in label
order, so label ``k`` (1-based in the mathematics) is ``cubes[k - 1]``.

Two cubes are *almost disjoint* when their interiors are disjoint, i.e. some
axis separates them (boundaries may touch).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

ZERO = Fraction(0)
HALF = Fraction(1, 2)
ONE_Q = Fraction(1)


class GeometryError(ValueError):
    """Raised when a construction would leave the operad spaces."""


def rat(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def rat_str(value: Fraction) -> str:
    return str(value)


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", rat(self.lo))
        object.__setattr__(self, "hi", rat(self.hi))
        if not self.lo < self.hi:
            raise GeometryError(f"degenerate interval [{self.lo}, {self.hi}]")

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def embed(self, inner: "Interval") -> "Interval":
        """Image of ``inner`` under the affine map [0,1] -> self."""
        w = self.hi - self.lo
        return Interval(self.lo + w * inner.lo, self.lo + w * inner.hi)

    def to_json(self) -> list:
        return [rat_str(self.lo), rat_str(self.hi)]

    @classmethod
    def from_json(cls, data) -> "Interval":
        lo, hi = data
        return cls(rat(lo), rat(hi))

    def __repr__(self):
        return f"[{self.lo},{self.hi}]"


FULL = Interval(ZERO, ONE_Q)


@dataclass(frozen=True)
class Cube:
    axes: tuple[Interval, ...]

    def __post_init__(self):
        axes = tuple(self.axes)
        object.__setattr__(self, "axes", axes)
        if not axes:
            raise GeometryError("a cube needs at least one axis")
        for iv in axes:
            if iv.lo < 0 or iv.hi > 1:
                raise GeometryError(f"{iv} leaves the unit interval")

    @property
    def dim(self) -> int:
        return len(self.axes)

    def separating_axis(self, other: "Cube") -> int | None:
        """Index of an axis on which the two cubes have disjoint interiors."""
        for k, (a, b) in enumerate(zip(self.axes, other.axes)):
            if a.hi <= b.lo or b.hi <= a.lo:
                return k
        return None

    def center(self) -> tuple[Fraction, ...]:
        return tuple((iv.lo + iv.hi) / 2 for iv in self.axes)

    def __repr__(self):
        return "x".join(map(repr, self.axes))


def affine_embed(outer: Cube, inner: Cube) -> Cube:
    """Apply the affine map [0,1]^n -> ``outer`` to ``inner``."""
    if outer.dim != inner.dim:
        raise GeometryError(f"dimension mismatch: {outer.dim} vs {inner.dim}")
    return Cube(tuple(o.embed(i) for o, i in zip(outer.axes, inner.axes)))


@dataclass(frozen=True)
class CubesConfig:
    """An element of LC_n(m)."""

    dim: int
    cubes: tuple[Cube, ...]

    def __post_init__(self):
        cubes = tuple(self.cubes)
        object.__setattr__(self, "cubes", cubes)
        if self.dim < 1:
            raise GeometryError("dimension must be positive")
        for c in cubes:
            if c.dim != self.dim:
                raise GeometryError(f"cube {c} is not {self.dim}-dimensional")
        for (i, a), (j, b) in itertools.combinations(enumerate(cubes), 2):
            if a.separating_axis(b) is None:
                raise GeometryError(f"cubes {i + 1} and {j + 1} overlap: {a} / {b}")

    @property
    def arity(self) -> int:
        return len(self.cubes)

    @classmethod
    def from_intervals(cls, *boxes: Sequence) -> "CubesConfig":
        """Build from per-cube sequences of (lo, hi) pairs; dim inferred."""
        cubes = tuple(Cube(tuple(Interval(lo, hi) for lo, hi in box)) for box in boxes)
        if not cubes:
            raise GeometryError("use CubesConfig.empty(dim) for arity 0")
        return cls(cubes[0].dim, cubes)

    @classmethod
    def empty(cls, dim: int) -> "CubesConfig":
        return cls(dim, ())

    def to_json(self) -> dict:
        return {"dim": self.dim, "cubes": [[iv.to_json() for iv in c.axes] for c in self.cubes]}

    @classmethod
    def from_json(cls, data: dict) -> "CubesConfig":
        dim = int(data["dim"])
        cubes = tuple(Cube(tuple(Interval.from_json(iv) for iv in c)) for c in data["cubes"])
        return cls(dim, cubes)

    def __repr__(self):
        return f"LC{self.dim}(" + ", ".join(map(repr, self.cubes)) + ")"


@dataclass(frozen=True)
class AElement:
    """An element of the non-symmetric little intervals operad A(k)."""

    intervals: tuple[Interval, ...]

    def __post_init__(self):
        ivs = tuple(self.intervals)
        object.__setattr__(self, "intervals", ivs)
        for iv in ivs:
            if iv.lo < 0 or iv.hi > 1:
                raise GeometryError(f"{iv} leaves the unit interval")
        for a, b in zip(ivs, ivs[1:]):
            if a.hi > b.lo:
                raise GeometryError(f"intervals out of order: {a} then {b}")

    @classmethod
    def of(cls, *pairs) -> "AElement":
        return cls(tuple(Interval(lo, hi) for lo, hi in pairs))

    @property
    def arity(self) -> int:
        return len(self.intervals)

    def as_config(self) -> CubesConfig:
        return CubesConfig(1, tuple(Cube((iv,)) for iv in self.intervals))

    @classmethod
    def from_config(cls, c: CubesConfig) -> "AElement":
        if c.dim != 1:
            raise GeometryError("only 1-dimensional configurations lie in A")
        return cls(tuple(cube.axes[0] for cube in c.cubes))

    def to_json(self) -> list:
        return [iv.to_json() for iv in self.intervals]

    @classmethod
    def from_json(cls, data) -> "AElement":
        return cls(tuple(Interval.from_json(iv) for iv in data))

    def __repr__(self):
        return "A(" + ",".join(map(repr, self.intervals)) + ")"


Element = Union[CubesConfig, AElement]

ONE = AElement((FULL,))
EMPTY_A = AElement(())
MU = AElement.of((0, HALF), (HALF, 1))


def unit_config(dim: int) -> CubesConfig:
    return CubesConfig(dim, (Cube((FULL,) * dim),))


def is_ordered(c: CubesConfig) -> bool:
    """True when a 1-dimensional configuration lies in A (label order = position order)."""
    if c.dim != 1:
        return False
    ivs = [cube.axes[0] for cube in c.cubes]
    return all(a.hi <= b.lo for a, b in zip(ivs, ivs[1:]))


def gamma(outer: Element, inners: Sequence[Element]) -> Element:
    """Full operad composition; labels are concatenated block by block.

    Works on either CubesConfigs or AElements (not mixed).
    """
    inners = list(inners)
    if len(inners) != outer.arity:
        raise GeometryError(f"outer arity {outer.arity} but {len(inners)} inputs")
    if isinstance(outer, AElement):
        if not all(isinstance(x, AElement) for x in inners):
            raise TypeError("cannot mix AElement and CubesConfig in gamma")
        out = []
        for slot, inner in zip(outer.intervals, inners):
            out.extend(slot.embed(iv) for iv in inner.intervals)
        return AElement(tuple(out))
    if not all(isinstance(x, CubesConfig) for x in inners):
        raise TypeError("cannot mix AElement and CubesConfig in gamma")
    for x in inners:
        if x.dim != outer.dim:
            raise GeometryError(f"dimension mismatch: {outer.dim} vs {x.dim}")
    cubes = []
    for slot, inner in zip(outer.cubes, inners):
        cubes.extend(affine_embed(slot, c) for c in inner.cubes)
    return CubesConfig(outer.dim, tuple(cubes))


def unit_like(x: Element) -> Element:
    return ONE if isinstance(x, AElement) else unit_config(x.dim)


def circ(outer: Element, i: int, inner: Element) -> Element:
    """Partial composition ``outer o_i inner`` with 1-based ``i``."""
    if not 1 <= i <= outer.arity:
        raise IndexError(f"slot {i} out of range for arity {outer.arity}")
    u = unit_like(outer)
    inners = [u] * outer.arity
    inners[i - 1] = inner
    return gamma(outer, inners)


def circ_last(outer: Element, inner: Element) -> Element:
    return circ(outer, outer.arity, inner)


def check_permutation(sigma: Sequence[int], m: int) -> tuple[int, ...]:
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(m)):
        raise ValueError(f"{sigma} is not a permutation of 0..{m - 1}")
    return sigma


def permute(c: CubesConfig, sigma: Sequence[int]) -> CubesConfig:
    """Right action: cube ``k`` of the result is cube ``sigma[k]`` of ``c``.

    Permutations are 0-based tuples of images.
    """
    sigma = check_permutation(sigma, c.arity)
    return CubesConfig(c.dim, tuple(c.cubes[s] for s in sigma))


def invert_permutation(sigma: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(sigma)
    for k, s in enumerate(sigma):
        inv[s] = k
    return tuple(inv)


def block_permutation(sigma: Sequence[int], arities: Sequence[int]) -> tuple[int, ...]:
    """Permutation of concatenated blocks.

    Block ``k`` of the result is block ``sigma[k]`` of the source, where the
    source blocks have sizes ``arities``.
    """
    offsets = list(itertools.accumulate([0, *arities]))
    out: list[int] = []
    for s in sigma:
        out.extend(range(offsets[s], offsets[s] + arities[s]))
    return tuple(out)


def block_sum(perms: Sequence[Sequence[int]]) -> tuple[int, ...]:
    out: list[int] = []
    offset = 0
    for p in perms:
        out.extend(offset + x for x in p)
        offset += len(p)
    return tuple(out)


def include_dim(a: Element, target: int) -> CubesConfig:
    """Pad every cube with trailing [0,1] factors up to dimension ``target``."""
    c = a.as_config() if isinstance(a, AElement) else a
    if target < c.dim:
        raise GeometryError(f"cannot include dimension {c.dim} into {target}")
    pad = (FULL,) * (target - c.dim)
    return CubesConfig(target, tuple(Cube(cube.axes + pad) for cube in c.cubes))


def rho_one(c: CubesConfig) -> CubesConfig:
    """The pairing with the unit of A(1): prepend a full first axis."""
    return pairing_rho(ONE, c)


def pairing_rho(a: AElement, c: CubesConfig) -> CubesConfig:
    """Cartesian pairing A(l) x LC_{n-1}(m) -> LC_n(lm), labels lexicographic in (i, j)."""
    cubes = tuple(Cube((iv,) + cube.axes) for iv in a.intervals for cube in c.cubes)
    return CubesConfig(c.dim + 1, cubes)


def lex_to_colex(l: int, m: int) -> tuple[int, ...]:
    """Permutation taking lexicographic (i, j) labels to colexicographic ones.

    ``permute(pairing_rho(a, c), lex_to_colex(l, m))`` lists cube (i, j) at
    position ``j * l + i``.
    """
    return tuple(i * m + j for j in range(m) for i in range(l))


def config_from_lists(boxes: Iterable[Sequence[Sequence]]) -> CubesConfig:
    return CubesConfig.from_intervals(*boxes)
