# Input package: RDF terms, indexed graphs, Turtle reading and writing
from .term import (
    BlankNode, Iri, Literal, Triple, RDF, RDFS, SH, XSD,
    RDF_FIRST, RDF_NIL, RDF_REST, RDF_TYPE, RDFS_LABEL,
    XSD_BOOLEAN, XSD_INTEGER, XSD_STRING, boolean, integer, string,
)
from .path import Predicate, Sequence, make_path
from .graph import Graph, compact_term, evaluate_path, isomorphic
from .reader import Reader, parse_turtle, read_text, read_turtle, read_turtle_files
from .writer import Writer, serialize_turtle, write_turtle
