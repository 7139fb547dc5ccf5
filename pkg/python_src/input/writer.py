"""Deterministic Turtle serialization"""
import re
from itertools import groupby
from pathlib import Path

from .term import BlankNode, Iri, Literal, RDF_TYPE, escape_string

_LOCAL_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_\-]*$")
_PREFIX_RE = re.compile(r"^([A-Za-z][A-Za-z0-9_\-]*)?$")


class Writer:
    """Write a Graph as Turtle, sorted by subject, predicate, object."""

    def __init__(self, graph):
        self.graph = graph
        self.prefixes = {p: ns for p, ns in graph.prefixes.items() if _PREFIX_RE.match(p)}
        # longest namespace wins when several prefixes apply
        self._by_length = sorted(self.prefixes.items(), key=lambda kv: (-len(kv[1]), kv[0]))

    def run(self):
        lines = [f"@prefix {p}: <{ns}> ." for p, ns in sorted(self.prefixes.items())]
        statements = []
        for subject, triples in groupby(self.graph.match(), key=lambda t: t.subject):
            statements.append(self._statement(subject, list(triples)))
        if statements:
            lines.append("")
            lines.extend(statements)
        return "\n".join(lines) + "\n"

    def _statement(self, subject, triples):
        parts = []
        for predicate, group in groupby(triples, key=lambda t: t.predicate):
            objects = ", ".join(self.term(t.object) for t in group)
            verb = "a" if predicate == RDF_TYPE else self.term(predicate)
            parts.append(f"{verb} {objects}")
        return f"{self.term(subject)} " + " ;\n    ".join(parts) + " ."

    def term(self, term):
        if isinstance(term, Iri):
            for prefix, namespace in self._by_length:
                local = term.value[len(namespace):]
                if term.value.startswith(namespace) and _LOCAL_NAME_RE.match(local):
                    return f"{prefix}:{local}"
            return f"<{term.value}>"
        if isinstance(term, BlankNode):
            return f"_:{term.label}"
        if isinstance(term, Literal):
            if term.is_integer or term.datatype.endswith("#boolean"):
                return term.lexical
            return '"' + escape_string(term.lexical) + '"'
        raise TypeError(f"not an RDF term: {term!r}")


def serialize_turtle(graph):
    return Writer(graph).run()


def write_turtle(graph, turtle_file):
    Path(turtle_file).write_text(serialize_turtle(graph), encoding="utf-8")
