"""RDF terms and triples"""
import re
from dataclasses import dataclass
from functools import total_ordering

from python_src.errors import MalformedLiteralError

RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS = "http://www.w3.org/2000/01/rdf-schema#"
XSD = "http://www.w3.org/2001/XMLSchema#"
SH = "http://www.w3.org/ns/shacl#"

XSD_STRING = XSD + "string"
XSD_BOOLEAN = XSD + "boolean"
XSD_INTEGER = XSD + "integer"

SUPPORTED_DATATYPES = (XSD_STRING, XSD_BOOLEAN, XSD_INTEGER)

_INTEGER_RE = re.compile(r"^[+-]?[0-9]+$")

# Sort rank of each term kind: IRIs first, then blank nodes, then literals.
_IRI_RANK = 0
_BNODE_RANK = 1
_LITERAL_RANK = 2


@total_ordering
class Term:
    """Common ordering for every term kind."""

    __slots__ = ()

    def sort_key(self):
        raise NotImplementedError

    def __lt__(self, other):
        if not isinstance(other, Term):
            return NotImplemented
        return self.sort_key() < other.sort_key()


@dataclass(frozen=True, eq=True)
class Iri(Term):
    value: str

    def sort_key(self):
        return (_IRI_RANK, self.value, "")

    def __str__(self):
        return f"<{self.value}>"


@dataclass(frozen=True, eq=True)
class BlankNode(Term):
    label: str

    def sort_key(self):
        return (_BNODE_RANK, self.label, "")

    def __str__(self):
        return f"_:{self.label}"


@dataclass(frozen=True, eq=True)
class Literal(Term):
    lexical: str
    datatype: str = XSD_STRING

    def __post_init__(self):
        if self.datatype not in SUPPORTED_DATATYPES:
            raise MalformedLiteralError(self.lexical, self.datatype)
        if self.datatype == XSD_BOOLEAN and self.lexical not in ("true", "false"):
            raise MalformedLiteralError(self.lexical, self.datatype)
        if self.datatype == XSD_INTEGER:
            if not _INTEGER_RE.match(self.lexical):
                raise MalformedLiteralError(self.lexical, self.datatype)
            # canonical decimal form, so "013" and "13" are the same term
            object.__setattr__(self, "lexical", str(int(self.lexical)))

    def sort_key(self):
        if self.datatype == XSD_INTEGER:
            return (_LITERAL_RANK, self.datatype, int(self.lexical))
        return (_LITERAL_RANK, self.datatype, self.lexical)

    @property
    def is_integer(self):
        return self.datatype == XSD_INTEGER

    def to_python(self):
        if self.datatype == XSD_INTEGER:
            return int(self.lexical)
        if self.datatype == XSD_BOOLEAN:
            return self.lexical == "true"
        return self.lexical

    def __str__(self):
        if self.datatype in (XSD_INTEGER, XSD_BOOLEAN):
            return self.lexical
        return '"' + escape_string(self.lexical) + '"'


def integer(value):
    return Literal(str(int(value)), XSD_INTEGER)


def boolean(value):
    return Literal("true" if value else "false", XSD_BOOLEAN)


def string(value):
    return Literal(value, XSD_STRING)


def escape_string(text):
    return text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n").replace("\r", "\\r")


@dataclass(frozen=True, order=True)
class Triple:
    subject: Term
    predicate: Iri
    object: Term

    def __post_init__(self):
        if isinstance(self.subject, Literal):
            raise ValueError(f"literal {self.subject} cannot be a subject")
        if not isinstance(self.predicate, Iri):
            raise ValueError(f"predicate must be an IRI, got {self.predicate}")

    def __iter__(self):
        return iter((self.subject, self.predicate, self.object))


RDF_TYPE = Iri(RDF + "type")
RDF_FIRST = Iri(RDF + "first")
RDF_REST = Iri(RDF + "rest")
RDF_NIL = Iri(RDF + "nil")
RDFS_LABEL = Iri(RDFS + "label")
