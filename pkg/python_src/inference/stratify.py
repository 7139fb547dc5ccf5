"""Rule grouping by sh:order and the stratification check for negative conditions"""
import logging
from dataclasses import dataclass
from itertools import groupby
from typing import Tuple

import networkx as nx

from python_src.errors import StratificationError
from python_src.input.term import Iri, RDF_TYPE
from python_src.shacl.model import (
    And, ClassMember, Constant, Equals, HasValue, LessThan, MaxCount, Not,
)

logger = logging.getLogger(__name__)

ANY_CLASS = Iri("*")


@dataclass(frozen=True)
class DependencyKey:
    """A predicate, or the class behind an rdf:type triple, that a rule reads or writes."""

    kind: str
    iri: Iri

    def __str__(self):
        return f"{self.kind} {self.iri}"

    def matches(self, emitted):
        if self == emitted:
            return True
        return self.kind == "class" and emitted == DependencyKey("class", ANY_CLASS)


@dataclass(frozen=True)
class RuleGroup:
    order: int
    members: Tuple


def constraint_keys(constraint):
    """Every predicate and class the constraint reads"""
    if isinstance(constraint, Not):
        return constraint_keys(constraint.inner)
    if isinstance(constraint, And):
        return set().union(*(constraint_keys(item) for item in constraint.items))
    keys = {DependencyKey("predicate", step) for step in constraint.path.steps}
    if isinstance(constraint, (LessThan, Equals)):
        keys.add(DependencyKey("predicate", constraint.other))
    elif isinstance(constraint, ClassMember):
        keys.add(DependencyKey("class", constraint.cls))
    elif isinstance(constraint, HasValue) and constraint.path.steps[-1] == RDF_TYPE \
            and isinstance(constraint.value, Iri):
        keys.add(DependencyKey("class", constraint.value))
    return keys


def negative_keys(constraint):
    """Keys read under negation: anything inside sh:not, and sh:maxCount 0 paths"""
    if constraint is None:
        return set()
    if isinstance(constraint, Not):
        return constraint_keys(constraint.inner)
    if isinstance(constraint, And):
        return set().union(*(negative_keys(item) for item in constraint.items))
    if isinstance(constraint, MaxCount) and constraint.n == 0:
        return {DependencyKey("predicate", step) for step in constraint.path.steps}
    return set()


def positive_keys(constraint):
    if constraint is None:
        return set()
    return constraint_keys(constraint) - negative_keys(constraint)


def emitted_keys(rule):
    keys = {DependencyKey("predicate", rule.predicate)}
    if rule.predicate == RDF_TYPE:
        if isinstance(rule.object, Constant) and isinstance(rule.object.term, Iri):
            keys.add(DependencyKey("class", rule.object.term))
        else:
            keys.add(DependencyKey("class", ANY_CLASS))
    return keys


def dependency_graph(doc):
    """Directed graph from emitting rules to the rules whose conditions read their output"""
    graph = nx.MultiDiGraph()
    members = doc.rules()
    for index, (shape, rule) in enumerate(members):
        graph.add_node(index, shape=shape, rule=rule)
    for consumer, (_, rule) in enumerate(members):
        reads = [(key, True) for key in sorted(negative_keys(rule.condition), key=str)]
        reads += [(key, False) for key in sorted(positive_keys(rule.condition), key=str)]
        for emitter, (_, other) in enumerate(members):
            emits = emitted_keys(other)
            for key, negative in reads:
                if any(key.matches(e) for e in emits):
                    graph.add_edge(emitter, consumer, dependency=key, negative=negative)
    return graph


def check_stratification(doc, graph=None):
    """Reject negative reads of anything a distinct rule emits at the same or a later order"""
    graph = dependency_graph(doc) if graph is None else graph
    for emitter, consumer, data in sorted(graph.edges(data=True), key=lambda e: (e[1], e[0])):
        if not data["negative"] or emitter == consumer:
            continue
        negating = graph.nodes[consumer]["rule"]
        emitting = graph.nodes[emitter]["rule"]
        if emitting.order >= negating.order:
            raise StratificationError(negating.id, emitting.id, data["dependency"])


def stratify(doc):
    """Group (shape, rule) pairs by ascending order, keeping document order inside a group"""
    check_stratification(doc)
    members = sorted(doc.rules(), key=lambda pair: pair[1].order)
    groups = [RuleGroup(order, tuple(pairs)) for order, pairs in groupby(members, key=lambda pair: pair[1].order)]
    logger.info("stratified %d rules into %d groups", len(members), len(groups))
    return groups
