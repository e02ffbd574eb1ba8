"""The Moore algebra and the comparison algebra C.

Both multiplications concatenate lengths and combine labels through a single
A(2) element, with the same missing-label convention as the enveloping
monoid (:func:`cubical.enveloping.combine_labels`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .enveloping import EnvElement, combine_labels
from .free_algebra import Term, unit_term
from .operad import ONE_Q, ZERO, GeometryError, rat


@dataclass(frozen=True)
class MooreElement:
    length: Fraction
    label: Optional[Term] = None

    def __post_init__(self):
        object.__setattr__(self, "length", rat(self.length))
        if self.length < 0:
            raise GeometryError("negative length")
        if self.label is not None and self.label.is_unit:
            object.__setattr__(self, "label", None)
        if self.label is not None and self.length == 0:
            raise GeometryError("a labelled Moore element needs positive length")

    def to_json(self) -> dict:
        return {"length": str(self.length), "label": None if self.label is None else self.label.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "MooreElement":
        label = data.get("label")
        return cls(rat(data["length"]), None if label is None else Term.from_json(label))


MOORE_UNIT = MooreElement(ZERO)


@dataclass(frozen=True)
class CElement:
    l1: Fraction
    l2: Fraction
    l3: Fraction
    label: Optional[Term] = None

    def __post_init__(self):
        for name in ("l1", "l2", "l3"):
            object.__setattr__(self, name, rat(getattr(self, name)))
        if self.l1 < 0 or self.l3 < 0 or self.l2 <= 0:
            raise GeometryError(f"({self.l1}, {self.l2}, {self.l3}) is not in E-bar")
        if self.label is not None and self.label.is_unit:
            object.__setattr__(self, "label", None)
        if self.label is not None and self.l1 == 0:
            raise GeometryError("a labelled element of C needs l1 > 0")

    @property
    def total(self) -> Fraction:
        return self.l1 + self.l2 + self.l3

    def to_json(self) -> dict:
        return {
            "l1": str(self.l1),
            "l2": str(self.l2),
            "l3": str(self.l3),
            "label": None if self.label is None else self.label.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "CElement":
        label = data.get("label")
        return cls(
            rat(data["l1"]), rat(data["l2"]), rat(data["l3"]),
            None if label is None else Term.from_json(label),
        )


C_UNIT = CElement(ZERO, ONE_Q, ZERO)


def moore_multiply(m1: MooreElement, m2: MooreElement) -> MooreElement:
    total = m1.length + m2.length
    u = m1.length / total if total > 0 else ZERO
    return MooreElement(total, combine_labels(u, m1.label, m2.label))


def c_multiply(c1: CElement, c2: CElement) -> CElement:
    first = c1.l1 + c1.l2 * c2.l1
    u = c1.l1 / first if first > 0 else ZERO
    return CElement(
        first,
        c1.l2 * c2.l2,
        c1.l2 * c2.l3 + c1.l3,
        combine_labels(u, c1.label, c2.label),
    )


def embed_moore(m: MooreElement) -> CElement:
    return CElement(m.length, ONE_Q, ZERO, m.label)


def embed_env(e: EnvElement) -> CElement:
    return CElement(e.x, e.y - e.x, 1 - e.y, e.label)


def moore_chi(m: MooreElement) -> Term:
    return unit_term() if m.label is None else m.label
