"""Property paths: a single predicate or a sequence of predicates"""
from dataclasses import dataclass
from typing import Tuple

from .term import Iri


@dataclass(frozen=True)
class Predicate:
    iri: Iri

    @property
    def steps(self) -> Tuple[Iri, ...]:
        return (self.iri,)


@dataclass(frozen=True)
class Sequence:
    elements: Tuple[Iri, ...]

    def __post_init__(self):
        if len(self.elements) < 2:
            raise ValueError("a sequence path needs at least two predicates")
        if not all(isinstance(e, Iri) for e in self.elements):
            raise ValueError("sequence path elements must be IRIs")

    @property
    def steps(self) -> Tuple[Iri, ...]:
        return self.elements


def make_path(steps):
    """Build the smallest path for a non-empty list of predicate IRIs."""
    steps = tuple(steps)
    if not steps:
        raise ValueError("a path needs at least one predicate")
    if len(steps) == 1:
        return Predicate(steps[0])
    return Sequence(steps)
