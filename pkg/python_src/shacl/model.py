"""SHACL-subset object model: constraints, shapes and triple rules"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple, Union

from python_src.input.path import Predicate, Sequence
from python_src.input.term import Iri, Term

PropertyPath = Union[Predicate, Sequence]


class Severity(Enum):
    VIOLATION = "Violation"
    INFO = "Info"


@dataclass(frozen=True)
class HasValue:
    path: PropertyPath
    value: Term
    component = "hasValue"


@dataclass(frozen=True)
class MinCount:
    path: PropertyPath
    n: int
    component = "minCount"


@dataclass(frozen=True)
class MaxCount:
    path: PropertyPath
    n: int
    component = "maxCount"


@dataclass(frozen=True)
class ClassMember:
    path: PropertyPath
    cls: Iri
    component = "class"


@dataclass(frozen=True)
class LessThan:
    path: PropertyPath
    other: Iri
    component = "lessThan"


@dataclass(frozen=True)
class Equals:
    path: PropertyPath
    other: Iri
    component = "equals"


@dataclass(frozen=True)
class Datatype:
    path: PropertyPath
    datatype: Iri
    component = "datatype"


@dataclass(frozen=True)
class Not:
    inner: "Constraint"
    component = "not"


@dataclass(frozen=True)
class And:
    items: Tuple["Constraint", ...]
    component = "and"


Constraint = Union[HasValue, MinCount, MaxCount, ClassMember, LessThan, Equals, Datatype, Not, And]

PATH_CONSTRAINTS = (HasValue, MinCount, MaxCount, ClassMember, LessThan, Equals, Datatype)


def conjunction(constraints):
    """And of the given constraints; a single constraint stays bare, none gives None.

    Items are put in a canonical order so equal conjunctions compare equal
    whatever order their members were declared in.
    """
    constraints = tuple(sorted(constraints, key=repr))
    if not constraints:
        return None
    if len(constraints) == 1:
        return constraints[0]
    return And(constraints)


@dataclass(frozen=True)
class This:
    pass


@dataclass(frozen=True)
class PathFrom:
    path: PropertyPath


@dataclass(frozen=True)
class Constant:
    term: Term


NodeSpec = Union[This, PathFrom, Constant]


@dataclass(frozen=True)
class TripleRule:
    id: str
    subject: NodeSpec
    predicate: Iri
    object: NodeSpec
    order: int = 0
    condition: Optional[Constraint] = None


@dataclass(frozen=True)
class NodeShape:
    id: Iri
    target_class: Iri
    constraints: Tuple[Constraint, ...] = ()
    rules: Tuple[TripleRule, ...] = ()
    severity: Severity = Severity.VIOLATION


@dataclass(frozen=True)
class ShapesDocument:
    shapes: Tuple[NodeShape, ...] = field(default_factory=tuple)

    def __post_init__(self):
        seen = set()
        for shape in self.shapes:
            if shape.id in seen:
                raise ValueError(f"duplicate shape id {shape.id}")
            seen.add(shape.id)

    def rules(self):
        """(shape, rule) pairs in document order."""
        return [(shape, rule) for shape in self.shapes for rule in shape.rules]

    def union(self, other):
        return ShapesDocument(self.shapes + other.shapes)

    def __len__(self):
        return len(self.shapes)
