"""ShapesParser class: builds a ShapesDocument from an RDF graph of shape declarations"""
import logging

from python_src.errors import ShapeParseError, UnknownComponentError
from python_src.input.path import make_path
from python_src.input.term import BlankNode, Iri, Literal, RDF_FIRST, RDF_NIL, RDF_REST, RDF_TYPE, RDFS_LABEL, SH
from . import vocab
from .model import (
    And, ClassMember, Constant, Datatype, Equals, HasValue, LessThan, MaxCount, MinCount,
    NodeShape, Not, PathFrom, Severity, ShapesDocument, This, TripleRule, conjunction,
)

logger = logging.getLogger(__name__)


class ShapesParser:
    def __init__(self, graph):
        self.graph = graph

    def run(self):
        """Parse every sh:NodeShape that has a target class"""
        shapes = []
        for node in sorted(self.graph.subjects(RDF_TYPE, vocab.NODE_SHAPE)):
            targets = sorted(self.graph.objects(node, vocab.TARGET_CLASS))
            if not targets:
                logger.debug("skipping %s: no sh:targetClass", node)
                continue
            if len(targets) > 1:
                raise ShapeParseError(node, "more than one sh:targetClass")
            if not isinstance(node, Iri) or not isinstance(targets[0], Iri):
                raise ShapeParseError(node, "shapes and target classes must be IRIs")
            shapes.append(self.parse_shape(node, targets[0]))

        doc = ShapesDocument(tuple(shapes))
        logger.info("parsed %d shapes with %d rules", len(doc), len(doc.rules()))
        return doc

    def parse_shape(self, node, target):
        rules = [self.parse_rule(node, r, i) for i, r in enumerate(sorted(self.graph.objects(node, vocab.RULE)))]
        rules.sort(key=lambda rule: (rule.order, rule.id))
        return NodeShape(
            id=node,
            target_class=target,
            constraints=tuple(sorted(self.node_constraints(node), key=repr)),
            rules=tuple(rules),
            severity=self.parse_severity(node),
        )

    def parse_severity(self, node):
        severity = self.graph.value(node, vocab.SEVERITY)
        if severity is None or severity == vocab.VIOLATION:
            return Severity.VIOLATION
        if severity == vocab.INFO:
            return Severity.INFO
        raise ShapeParseError(node, f"unsupported severity {severity}")

    def node_constraints(self, node):
        """Constraints declared on a shape or condition node"""
        for _, predicate, _ in self.graph.match(node):
            if predicate.value.startswith(SH) and predicate not in vocab.SHAPE_KEYS:
                raise UnknownComponentError(node, predicate.value)
        constraints = []
        for prop in sorted(self.graph.objects(node, vocab.PROPERTY)):
            constraints.extend(self.property_constraints(prop))
        for inner in sorted(self.graph.objects(node, vocab.NOT)):
            negated = conjunction(self.node_constraints(inner))
            if negated is None:
                raise ShapeParseError(inner, "sh:not without constraints")
            constraints.append(Not(negated))
        for members in sorted(self.graph.objects(node, vocab.AND)):
            items = [conjunction(self.node_constraints(m)) for m in self.read_list(members)]
            if any(item is None for item in items) or not items:
                raise ShapeParseError(members, "sh:and member without constraints")
            constraints.append(And(tuple(items)))
        return constraints

    def property_constraints(self, prop):
        path_node = self.graph.value(prop, vocab.PATH)
        if path_node is None:
            raise ShapeParseError(prop, "property shape without sh:path")
        path = self.parse_path(path_node)

        constraints = []
        for _, predicate, value in self.graph.match(prop):
            if predicate in vocab.ANNOTATIONS or not predicate.value.startswith(SH):
                continue
            if predicate == vocab.HAS_VALUE:
                constraints.append(HasValue(path, value))
            elif predicate == vocab.MIN_COUNT:
                constraints.append(MinCount(path, self.count(prop, value)))
            elif predicate == vocab.MAX_COUNT:
                constraints.append(MaxCount(path, self.count(prop, value)))
            elif predicate == vocab.CLASS:
                constraints.append(ClassMember(path, self.iri(prop, value)))
            elif predicate == vocab.LESS_THAN:
                constraints.append(LessThan(path, self.iri(prop, value)))
            elif predicate == vocab.EQUALS:
                constraints.append(Equals(path, self.iri(prop, value)))
            elif predicate == vocab.DATATYPE:
                constraints.append(Datatype(path, self.iri(prop, value)))
            else:
                raise UnknownComponentError(prop, predicate.value)
        return constraints

    def parse_path(self, node):
        if isinstance(node, Iri) and node != RDF_NIL:
            return make_path([node])
        if node == RDF_NIL:
            raise ShapeParseError(node, "sh:path list must not be empty")
        if not self.graph.objects(node, RDF_FIRST):
            raise ShapeParseError(node, "only predicate and sequence paths are supported")
        steps = self.read_list(node)
        for step in steps:
            self.iri(node, step)
        return make_path(steps)

    def read_list(self, node):
        items, seen = [], set()
        while node != RDF_NIL:
            if node in seen:
                raise ShapeParseError(node, "cyclic RDF list")
            seen.add(node)
            first = self.graph.value(node, RDF_FIRST)
            rest = self.graph.value(node, RDF_REST)
            if first is None or rest is None:
                raise ShapeParseError(node, "malformed RDF list")
            items.append(first)
            node = rest
        return items

    def parse_rule(self, shape, node, index):
        if vocab.TRIPLE_RULE not in self.graph.objects(node, RDF_TYPE):
            raise ShapeParseError(node, "only sh:TripleRule rules are supported")
        label = self.graph.value(node, RDFS_LABEL)
        rule_id = label.lexical if isinstance(label, Literal) else f"{shape.value}#rule{index}"

        predicate = self.graph.value(node, vocab.PREDICATE)
        if predicate is None:
            raise ShapeParseError(node, f"rule {rule_id} is missing sh:predicate")

        order = self.graph.value(node, vocab.ORDER)
        if order is not None and not (isinstance(order, Literal) and order.is_integer):
            raise ShapeParseError(node, f"sh:order must be an integer, got {order}")

        condition = []
        for cond in sorted(self.graph.objects(node, vocab.CONDITION)):
            condition.extend(self.node_constraints(cond))

        return TripleRule(
            id=rule_id,
            subject=self.node_spec(node, vocab.SUBJECT),
            predicate=self.iri(node, predicate),
            object=self.node_spec(node, vocab.OBJECT),
            order=int(order.lexical) if order is not None else 0,
            condition=conjunction(condition),
        )

    def node_spec(self, rule_node, key):
        value = self.graph.value(rule_node, key)
        if value is None:
            raise ShapeParseError(rule_node, f"rule is missing {key}")
        if value == vocab.THIS:
            return This()
        if isinstance(value, BlankNode):
            path_node = self.graph.value(value, vocab.PATH)
            if path_node is None:
                raise ShapeParseError(value, "node expression must be sh:this, a constant or a sh:path")
            return PathFrom(self.parse_path(path_node))
        return Constant(value)

    @staticmethod
    def count(node, value):
        if not (isinstance(value, Literal) and value.is_integer and int(value.lexical) >= 0):
            raise ShapeParseError(node, f"expected a non-negative integer, got {value}")
        return int(value.lexical)

    @staticmethod
    def iri(node, value):
        if not isinstance(value, Iri):
            raise ShapeParseError(node, f"expected an IRI, got {value}")
        return value


def parse_shapes(graph):
    """Convenience function to parse the shapes declared in `graph`"""
    return ShapesParser(graph).run()
