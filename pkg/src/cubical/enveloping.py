"""The enveloping-algebra monoid of an A-algebra, in its little-intervals model.

A point of D is a pair of abutting intervals ``([0,a],[a,b])`` and is stored
as ``DPoint(a, b)``; a point of D-bar = A(1) is an interval ``[x,y]``.  The
monoid elements are :class:`EnvElement` values ``(x, y, label)``: with a
label they are D-points whose first interval carries a term, without one
they are D-bar points.  A unit label is the same thing as no label.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .free_algebra import Term, apply, unit_term
from .operad import (
    EMPTY_A,
    HALF,
    ONE_Q,
    ZERO,
    AElement,
    GeometryError,
    Interval,
    circ,
    rat,
)


@dataclass(frozen=True)
class DPoint:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", rat(self.a))
        object.__setattr__(self, "b", rat(self.b))
        if not 0 < self.a < self.b <= 1:
            raise GeometryError(f"({self.a}, {self.b}) is not a point of D")

    def coords(self) -> tuple[Fraction, Fraction]:
        return self.a, self.b

    def as_a(self) -> AElement:
        return AElement.of((0, self.a), (self.a, self.b))


@dataclass(frozen=True)
class DBarPoint:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", rat(self.x))
        object.__setattr__(self, "y", rat(self.y))
        if not 0 <= self.x < self.y <= 1:
            raise GeometryError(f"[{self.x}, {self.y}] is not a point of D-bar")

    def coords(self) -> tuple[Fraction, Fraction]:
        return self.x, self.y

    def as_a(self) -> AElement:
        return AElement.of((self.x, self.y))


Point = Union[DPoint, DBarPoint]


def _point_like(template: Point, lo, hi) -> Point:
    return DPoint(lo, hi) if isinstance(template, DPoint) else DBarPoint(lo, hi)


@dataclass(frozen=True)
class EnvElement:
    x: Fraction
    y: Fraction
    label: Optional[Term] = None

    def __post_init__(self):
        object.__setattr__(self, "x", rat(self.x))
        object.__setattr__(self, "y", rat(self.y))
        if not 0 <= self.x < self.y <= 1:
            raise GeometryError(f"({self.x}, {self.y}) is not a point of D-bar")
        if self.label is not None and self.label.is_unit:
            # pushout gluing along the unit S -> R
            object.__setattr__(self, "label", None)
        if self.label is not None and self.x == 0:
            raise GeometryError("a labelled element needs a nonempty first interval")

    @property
    def labelled(self) -> bool:
        return self.label is not None

    def point(self) -> Point:
        if self.labelled:
            return DPoint(self.x, self.y)
        return DBarPoint(self.x, self.y)

    def to_json(self) -> dict:
        return {
            "x": str(self.x),
            "y": str(self.y),
            "label": None if self.label is None else self.label.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "EnvElement":
        label = data.get("label")
        return cls(rat(data["x"]), rat(data["y"]), None if label is None else Term.from_json(label))


ENV_UNIT = EnvElement(ZERO, ONE_Q)


def combine_labels(u: Fraction, left: Optional[Term], right: Optional[Term]) -> Optional[Term]:
    """Multiply two optional labels through the A(2) element ([0,u],[u,1]).

    A missing label is the unit, i.e. its slot is filled with the arity-0
    element and drops out; only the surviving slots are built, so ``u`` may
    sit at 0 or 1 when the corresponding side is unlabelled.
    """
    slots, terms = [], []
    if left is not None and not left.is_unit:
        slots.append(Interval(ZERO, u))
        terms.append(left)
    if right is not None and not right.is_unit:
        slots.append(Interval(u, ONE_Q))
        terms.append(right)
    if not terms:
        return None
    result = apply(AElement(tuple(slots)), terms)
    return None if result.is_unit else result


def p(d1: DPoint, d2: Point) -> DPoint:
    a, b = d1.coords()
    c, d = d2.coords()
    return DPoint(a + (b - a) * c, a + (b - a) * d)


def q_break(d1: DPoint, d2: Point) -> Fraction:
    """Breakpoint of q: the first interval of q(d1, d2) is [0, q_break]."""
    a, b = d1.coords()
    c = d2.coords()[0]
    return a / (a + (b - a) * c)


def q(d1: DPoint, d2: DPoint) -> AElement:
    u = q_break(d1, d2)
    return AElement.of((0, u), (u, 1))


def q_from_p(d1: DPoint, pt: Point) -> Fraction:
    """The q breakpoint recovered from the first coordinate of a p-value."""
    return d1.a / pt.coords()[0]


def d_circ2(d1: DPoint, d2: DPoint) -> AElement:
    """``d1 o_2 d2`` computed in A(3)."""
    return circ(d1.as_a(), 2, d2.as_a())


def env_multiply(e1: EnvElement, e2: EnvElement) -> EnvElement:
    w = e1.y - e1.x
    x = e1.x + w * e2.x
    y = e1.x + w * e2.y
    u = e1.x / x if x > 0 else ZERO
    return EnvElement(x, y, combine_labels(u, e1.label, e2.label))


def env_product(elements: Sequence[EnvElement]) -> EnvElement:
    out = ENV_UNIT
    for e in elements:
        out = env_multiply(out, e)
    return out


def f_m(a: AElement) -> tuple[Point, AElement]:
    """Split A(m+1) into D x A(m) by the last interval (identity on A(1))."""
    if a.arity == 0:
        raise GeometryError("f_m needs at least one interval")
    last = a.intervals[-1]
    if a.arity == 1:
        return DBarPoint(last.lo, last.hi), EMPTY_A
    x = last.lo
    rest = tuple(Interval(iv.lo / x, iv.hi / x) for iv in a.intervals[:-1])
    return DPoint(last.lo, last.hi), AElement(rest)


def recompose(point: Point, b: AElement) -> AElement:
    """Inverse of :func:`f_m`: plug ``b`` into the first interval of the D-point."""
    if isinstance(point, DBarPoint):
        if b.arity:
            raise GeometryError("a D-bar point carries no A(m) factor")
        return point.as_a()
    return circ(point.as_a(), 1, b)


def normalize_ur(a: AElement, labels: Sequence[Term]) -> EnvElement:
    """The map UR -> A on the summand A(m+1) x R^m."""
    labels = list(labels)
    if len(labels) != a.arity - 1:
        raise GeometryError(f"A({a.arity}) needs {a.arity - 1} labels, got {len(labels)}")
    point, b = f_m(a)
    lo, hi = point.coords()
    if not labels:
        return EnvElement(lo, hi)
    return EnvElement(lo, hi, apply(b, labels))


def ur_multiply(a: AElement, la: Sequence[Term], c: AElement, lc: Sequence[Term]):
    """Multiplication in UR: compose into the last interval and concatenate labels."""
    return circ(a, a.arity, c), list(la) + list(lc)


def chi(e: EnvElement) -> Term:
    if e.label is None:
        return unit_term()
    return apply(AElement.of((0, e.x)), [e.label])


def psi(t: Term) -> EnvElement:
    return EnvElement(HALF, ONE_Q, t)


def _check_time(t) -> Fraction:
    t = rat(t)
    if not 0 <= t <= 1:
        raise ValueError(f"homotopy parameter {t} outside [0,1]")
    return t


def H(t, e: EnvElement) -> EnvElement:
    """Linear homotopy from psi o chi (t=0) to the identity (t=1), on coordinates."""
    t = _check_time(t)
    x = HALF + t * (e.x - HALF)
    y = (1 - t) + t * e.y
    if not y > x:
        raise AssertionError(f"H_{t} left D at {e}")
    return EnvElement(x, y, e.label)


def G(t, r: Term) -> Term:
    t = _check_time(t)
    return apply(AElement.of((0, HALF + t / 2)), [r])


def diag(d: Point, m: int) -> list[Point]:
    if m < 1:
        raise ValueError("diagonal needs m >= 1")
    return [d] * m


def g_max_min(ds: Sequence[Point]) -> Point:
    """max of first coordinates, min of gaps; lands in D-bar only if every input does."""
    if not ds:
        raise ValueError("g needs at least one point")
    coords = [d.coords() for d in ds]
    c = max(lo for lo, _ in coords)
    gap = min(hi - lo for lo, hi in coords)
    if any(isinstance(d, DPoint) for d in ds):
        return DPoint(c, c + gap)
    return DBarPoint(c, c + gap)


def h(t, ds: Sequence[Point]) -> list[Point]:
    """Linear homotopy from diag o g (t=0) to the identity (t=1) on D^m."""
    t = _check_time(t)
    c, d = g_max_min(ds).coords()
    out = []
    for di in ds:
        ci, dd = di.coords()
        if not (1 - t) * (d - c) + t * (dd - ci) > 0:
            raise AssertionError(f"h_{t} positivity failed at {di}")
        out.append(_point_like(di, c + t * (ci - c), d + t * (dd - d)))
    return out
