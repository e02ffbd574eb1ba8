"""Normal forms in the free A-algebra on named generators.

A term is a single A(k) element applied to a word of k generators.  Nested
applications are flattened eagerly with operad composition, so two terms are
equal exactly when their shapes and words are equal.  The arity-0 term is
the algebra unit; A(0) is a point, so there is exactly one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .operad import EMPTY_A, ONE, AElement, GeometryError, gamma


@dataclass(frozen=True)
class Term:
    shape: AElement
    word: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        if self.shape.arity != len(self.word):
            raise GeometryError(f"shape arity {self.shape.arity} != word length {len(self.word)}")

    @property
    def arity(self) -> int:
        return len(self.word)

    @property
    def is_unit(self) -> bool:
        return not self.word

    def to_json(self) -> dict:
        return {"shape": self.shape.to_json(), "word": list(self.word)}

    @classmethod
    def from_json(cls, data: dict) -> "Term":
        return cls(AElement.from_json(data["shape"]), tuple(data["word"]))

    def __repr__(self):
        if self.is_unit:
            return "1"
        return f"{self.shape!r}[{' '.join(self.word)}]"


def gen(name: str) -> Term:
    """The bare generator ``name``, represented as (1, [name])."""
    return Term(ONE, (name,))


def unit_term() -> Term:
    return Term(EMPTY_A, ())


def apply(a: AElement, terms: Sequence[Term]) -> Term:
    terms = list(terms)
    if len(terms) != a.arity:
        raise GeometryError(f"A({a.arity}) applied to {len(terms)} terms")
    shape = gamma(a, [t.shape for t in terms])
    word = tuple(g for t in terms for g in t.word)
    return Term(shape, word)
