"""Write a ShapesDocument back as SHACL triples"""
import itertools

from python_src.input.graph import Graph, new_scope
from python_src.input.path import Predicate
from python_src.input.term import BlankNode, RDF_FIRST, RDF_NIL, RDF_REST, RDF_TYPE, RDFS_LABEL, Triple, integer, string
from . import vocab
from .model import (
    And, ClassMember, Constant, Datatype, Equals, HasValue, LessThan, MaxCount, MinCount,
    Not, PathFrom, Severity, This,
)

_COMPONENT_PREDICATES = {
    HasValue: (vocab.HAS_VALUE, lambda c: c.value),
    MinCount: (vocab.MIN_COUNT, lambda c: integer(c.n)),
    MaxCount: (vocab.MAX_COUNT, lambda c: integer(c.n)),
    ClassMember: (vocab.CLASS, lambda c: c.cls),
    LessThan: (vocab.LESS_THAN, lambda c: c.other),
    Equals: (vocab.EQUALS, lambda c: c.other),
    Datatype: (vocab.DATATYPE, lambda c: c.datatype),
}


class ShapesWriter:
    def __init__(self, doc, prefixes=None):
        self.doc = doc
        self.graph = Graph(prefixes=prefixes)
        self._scope = new_scope()
        self._ids = itertools.count()

    def run(self):
        for shape in self.doc.shapes:
            self.add(shape.id, RDF_TYPE, vocab.NODE_SHAPE)
            self.add(shape.id, vocab.TARGET_CLASS, shape.target_class)
            if shape.severity is Severity.INFO:
                self.add(shape.id, vocab.SEVERITY, vocab.INFO)
            for constraint in shape.constraints:
                self.write_constraint(shape.id, constraint)
            for rule in shape.rules:
                self.write_rule(shape.id, rule)
        return self.graph

    def fresh(self):
        return BlankNode(f"{self._scope}s{next(self._ids)}")

    def add(self, s, p, o):
        self.graph.add(Triple(s, p, o))

    def write_constraint(self, owner, constraint):
        if isinstance(constraint, Not):
            inner = self.fresh()
            self.add(owner, vocab.NOT, inner)
            self.write_constraint(inner, constraint.inner)
        elif isinstance(constraint, And):
            members = []
            for item in constraint.items:
                member = self.fresh()
                self.write_constraint(member, item)
                members.append(member)
            self.add(owner, vocab.AND, self.write_list(members))
        else:
            predicate, value = _COMPONENT_PREDICATES[type(constraint)]
            prop = self.fresh()
            self.add(owner, vocab.PROPERTY, prop)
            self.add(prop, vocab.PATH, self.write_path(constraint.path))
            self.add(prop, predicate, value(constraint))

    def write_rule(self, shape_id, rule):
        node = self.fresh()
        self.add(shape_id, vocab.RULE, node)
        self.add(node, RDF_TYPE, vocab.TRIPLE_RULE)
        self.add(node, RDFS_LABEL, string(rule.id))
        self.add(node, vocab.ORDER, integer(rule.order))
        self.add(node, vocab.SUBJECT, self.write_spec(rule.subject))
        self.add(node, vocab.PREDICATE, rule.predicate)
        self.add(node, vocab.OBJECT, self.write_spec(rule.object))
        if rule.condition is not None:
            condition = self.fresh()
            self.add(node, vocab.CONDITION, condition)
            self.write_constraint(condition, rule.condition)

    def write_spec(self, spec):
        if isinstance(spec, This):
            return vocab.THIS
        if isinstance(spec, PathFrom):
            node = self.fresh()
            self.add(node, vocab.PATH, self.write_path(spec.path))
            return node
        if isinstance(spec, Constant):
            return spec.term
        raise TypeError(f"unknown node spec {spec!r}")

    def write_path(self, path):
        if isinstance(path, Predicate):
            return path.iri
        return self.write_list(path.steps)

    def write_list(self, items):
        head = RDF_NIL
        for item in reversed(items):
            cell = self.fresh()
            self.add(cell, RDF_FIRST, item)
            self.add(cell, RDF_REST, head)
            head = cell
        return head


def shapes_to_graph(doc, prefixes=None):
    """Convenience function: the SHACL graph declaring `doc`"""
    return ShapesWriter(doc, prefixes).run()
