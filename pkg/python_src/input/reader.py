"""Reader class for Turtle documents"""
import logging
import re
from pathlib import Path

import rdflib
from rdflib.compare import to_canonical_graph
from rdflib.plugins.parsers.notation3 import BadSyntax

from python_src.errors import InputEncodingError, MalformedLiteralError, TurtleSyntaxError, UnknownPrefixError
from .graph import Graph, new_scope
from .term import BlankNode, Iri, Literal, Triple, XSD_STRING

logger = logging.getLogger(__name__)

_UNBOUND_PREFIX_RE = re.compile(r'Prefix "([^"]*):" not bound')


# Global reader instance for convenience functions
_reader = None


def get_reader():
    """Get or create global reader instance"""
    global _reader
    if _reader is None:
        _reader = Reader()
    return _reader


class Reader:
    def read_file_to_graph(self, turtle_file):
        """Read a UTF-8 Turtle file into a Graph"""
        text = read_text(turtle_file)
        graph = self.parse_text(text)
        logger.info("read %d triples from %s", len(graph), turtle_file)
        return graph

    def parse_text(self, text):
        """Parse a Turtle document; blank nodes get labels unique to this parse."""
        source = rdflib.Graph(bind_namespaces="none")
        try:
            source.parse(data=text, format="turtle")
        except BadSyntax as exc:
            raise self._syntax_error(exc, text) from exc

        graph = Graph()
        for prefix, namespace in source.namespaces():
            graph.bind(prefix, str(namespace))

        # Canonical labelling makes blank-node order independent of parser internals.
        canonical = list(to_canonical_graph(source))
        scope = new_scope()
        bnodes = sorted({str(t) for triple in canonical for t in triple
                         if isinstance(t, rdflib.BNode)})
        labels = {b: BlankNode(f"{scope}b{i}") for i, b in enumerate(bnodes)}

        for s, p, o in canonical:
            graph.add(Triple(self._term(s, labels), self._term(p, labels), self._term(o, labels)))
        return graph

    def _term(self, node, labels):
        if isinstance(node, rdflib.BNode):
            return labels[str(node)]
        if isinstance(node, rdflib.URIRef):
            return Iri(str(node))
        if node.language:
            raise MalformedLiteralError(f"{node}@{node.language}", "language-tagged string")
        datatype = str(node.datatype) if node.datatype is not None else XSD_STRING
        return Literal(str(node), datatype)

    def _syntax_error(self, exc, text):
        why = str(getattr(exc, "_why", exc))
        offset = getattr(exc, "_i", None)
        if offset is None or not 0 <= offset <= len(text):
            line, column, token = getattr(exc, "lines", 0) + 1, 1, ""
        else:
            line = text.count("\n", 0, offset) + 1
            column = offset - (text.rfind("\n", 0, offset) + 1) + 1
            rest = text[offset:].split(None, 1)
            token = rest[0][:40] if rest else "<end of input>"
        unbound = _UNBOUND_PREFIX_RE.search(why)
        if unbound:
            return UnknownPrefixError(unbound.group(1), line)
        return TurtleSyntaxError(line, column, token, why)


# Convenience functions using global reader instance
def parse_turtle(text):
    """Convenience function to parse a Turtle string"""
    return get_reader().parse_text(text)


def read_turtle(turtle_file):
    """Convenience function to read a Turtle file"""
    return get_reader().read_file_to_graph(turtle_file)


def read_turtle_files(turtle_files):
    """Read several files into one graph, renaming blank nodes apart"""
    merged = Graph()
    for turtle_file in turtle_files:
        merged.merge(read_turtle(turtle_file))
    return merged


def read_text(path):
    """Read a UTF-8 input file; undecodable bytes raise InputEncodingError naming the file"""
    try:
        return Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise InputEncodingError(path, f"byte 0x{exc.object[exc.start]:02x} at offset {exc.start}") from exc
