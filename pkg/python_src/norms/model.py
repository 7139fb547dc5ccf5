"""Norm data model: obligations, permissions and constitutive rules"""
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Tuple, Union
from urllib.parse import quote

from python_src.input.path import Predicate, Sequence
from python_src.input.term import Iri, Term
from python_src.shacl.model import NodeSpec

PropertyPath = Union[Predicate, Sequence]

_CURIE_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_\-]*)?:([A-Za-z0-9_][A-Za-z0-9_\-]*)$")


class NormKind(Enum):
    OBLIGATION = "obligation"
    PERMISSION = "permission"
    CONSTITUTIVE = "constitutive"


@dataclass(frozen=True)
class ClassAtom:
    path: PropertyPath
    cls: Iri


@dataclass(frozen=True)
class CompareAtom:
    kind: str  # "less-than" | "equals"
    path: PropertyPath
    other: Iri


@dataclass(frozen=True)
class CardinalityAtom:
    kind: str  # "min" | "max"
    path: PropertyPath
    n: int


@dataclass(frozen=True)
class ValueAtom:
    path: PropertyPath
    value: Term


Atom = Union[ClassAtom, CompareAtom, CardinalityAtom, ValueAtom]


@dataclass(frozen=True)
class NafAtom:
    inner: Union[Atom, "NafAtom"]


@dataclass(frozen=True)
class Require:
    path: PropertyPath
    value: Term


@dataclass(frozen=True)
class Assert:
    subject: NodeSpec
    predicate: Iri
    object: NodeSpec


@dataclass(frozen=True)
class NormRule:
    id: str
    kind: NormKind
    target: Iri
    consequent: Union[Require, Assert]
    antecedent: Tuple[Union[Atom, NafAtom], ...] = ()
    order: int = 0

    def __post_init__(self):
        if self.kind is NormKind.CONSTITUTIVE:
            if not isinstance(self.consequent, Assert):
                raise ValueError(f"constitutive norm {self.id} must assert a triple")
        else:
            if not isinstance(self.consequent, Require):
                raise ValueError(f"{self.kind.value} {self.id} must require a value")
            if self.order != 0:
                raise ValueError(f"{self.kind.value} {self.id} cannot carry an order")


@dataclass(frozen=True)
class NormSet:
    norms: Tuple[NormRule, ...] = ()
    prefixes: Dict[str, str] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        ids = [norm.id for norm in self.norms]
        duplicates = sorted({i for i in ids if ids.count(i) > 1})
        if duplicates:
            raise ValueError(f"duplicate norm ids: {', '.join(duplicates)}")

    def of_kind(self, kind):
        return [norm for norm in self.norms if norm.kind is kind]

    @property
    def obligations(self):
        return self.of_kind(NormKind.OBLIGATION)

    @property
    def permissions(self):
        return self.of_kind(NormKind.PERMISSION)

    @property
    def constitutive(self):
        return self.of_kind(NormKind.CONSTITUTIVE)

    def shape_iri(self, norm):
        """CURIE ids over a declared prefix name their shape; other ids live under urn:norm:"""
        match = _CURIE_RE.match(norm.id)
        if match and (match.group(1) or "") in self.prefixes:
            return Iri(self.prefixes[match.group(1) or ""] + match.group(2))
        return Iri("urn:norm:" + quote(norm.id, safe=""))

    def __len__(self):
        return len(self.norms)
