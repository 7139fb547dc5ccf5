"""
Shared pytest fixtures: shipped data files, the GDPR scenario, seeded random
graphs, constraints and rule sets, and a brute-force constraint evaluator
"""
from pathlib import Path

import numpy as np
import pytest

from python_src.input.graph import Graph
from python_src.input.path import make_path
from python_src.input.reader import read_turtle
from python_src.input.term import Iri, Literal, RDF_TYPE, Triple, XSD_INTEGER, XSD_STRING, integer
from python_src.shacl.model import (
    And, ClassMember, Constant, Datatype, Equals, HasValue, LessThan, MaxCount, MinCount,
    NodeShape, Not, PathFrom, ShapesDocument, This, TripleRule, conjunction,
)

DATA_DIR = Path(__file__).parent / "data"
SHRIOL = "http://www.example.org/shRIOL#"
EX = "http://example.org/random#"

RANDOM_INSTANCES = 1000


def shriol(local):
    return Iri(SHRIOL + local)


def ex(local):
    return Iri(EX + local)


NODES = [ex(f"n{i}") for i in range(5)]
LINKS = [ex("p0"), ex("p1")]
VALUES = [ex("v0"), ex("v1")]
CLASSES = [ex("C0"), ex("C1")]
INTEGERS = [integer(i) for i in range(4)]


def pick(rng, items):
    return items[int(rng.integers(len(items)))]


# --- shipped files ---

@pytest.fixture
def scenario_path():
    return DATA_DIR / "scenario.ttl"


@pytest.fixture
def norms_path():
    return DATA_DIR / "gdpr.norms"


@pytest.fixture
def handwritten_path():
    return DATA_DIR / "handwritten.ttl"


@pytest.fixture
def restrictions_path():
    return DATA_DIR / "restrictions.ttl"


@pytest.fixture
def scenario(scenario_path):
    return read_turtle(scenario_path)


# --- random instances ---

@pytest.fixture
def rng():
    return np.random.default_rng(20240605)


def random_graph(rng, max_triples=30):
    """Links between nodes, integer values and class memberships"""
    graph = Graph(prefixes={"ex": EX})
    for _ in range(int(rng.integers(0, max_triples + 1))):
        subject = pick(rng, NODES)
        kind = int(rng.integers(3))
        if kind == 0:
            graph.add(Triple(subject, pick(rng, LINKS), pick(rng, NODES)))
        elif kind == 1:
            graph.add(Triple(subject, pick(rng, VALUES), pick(rng, INTEGERS)))
        else:
            graph.add(Triple(subject, RDF_TYPE, pick(rng, CLASSES)))
    return graph


def random_path(rng, ends):
    steps = [pick(rng, LINKS) for _ in range(int(rng.integers(0, 3)))]
    return make_path(steps + [pick(rng, ends)])


def random_constraint(rng, depth=2):
    kind = int(rng.integers(9 if depth else 7))
    if kind == 0:
        end = pick(rng, LINKS + VALUES)
        value = pick(rng, INTEGERS if end in VALUES else NODES)
        return HasValue(random_path(rng, [end]), value)
    if kind == 1:
        return MinCount(random_path(rng, LINKS + VALUES), int(rng.integers(0, 4)))
    if kind == 2:
        return MaxCount(random_path(rng, LINKS + VALUES), int(rng.integers(0, 4)))
    if kind == 3:
        return ClassMember(random_path(rng, LINKS), pick(rng, CLASSES))
    if kind == 4:
        return LessThan(random_path(rng, VALUES), pick(rng, VALUES))
    if kind == 5:
        return Equals(random_path(rng, LINKS + VALUES), pick(rng, LINKS + VALUES))
    if kind == 6:
        return Datatype(random_path(rng, LINKS + VALUES), Iri(pick(rng, [XSD_INTEGER, XSD_STRING])))
    if kind == 7:
        return Not(random_constraint(rng, depth - 1))
    return And(tuple(random_constraint(rng, depth - 1) for _ in range(int(rng.integers(2, 4)))))


class RandomRules:
    """Rule sets that are stratified by construction.

    Every predicate and class gets a level; a rule emitting a key runs at that
    key's level, reads keys monotonically (hasValue, minCount, node
    expressions, targets) up to its own level and everything else strictly
    below it.
    """

    def __init__(self, rng):
        self.rng = rng
        self.level = {key: int(rng.integers(0, 3)) for key in LINKS + VALUES + CLASSES}

    def allowed(self, keys, order, strict):
        return [k for k in keys if (self.level[k] < order if strict else self.level[k] <= order)]

    def path(self, ends, order, strict):
        links = self.allowed(LINKS, order, strict)
        ends = self.allowed(ends, order, strict)
        if not ends:
            return None
        steps = [pick(self.rng, links) for _ in range(int(self.rng.integers(0, 2)))] if links else []
        return make_path(steps + [pick(self.rng, ends)])

    def value_for(self, path):
        return pick(self.rng, INTEGERS if path.steps[-1] in VALUES else NODES)

    def atom(self, order):
        rng = self.rng
        kind = int(rng.integers(6))
        if kind in (0, 5):
            path = self.path(LINKS + VALUES, order, strict=kind == 5)
            if path is None:
                return None
            has_value = HasValue(path, self.value_for(path))
            return has_value if kind == 0 else Not(has_value)
        if kind == 1:
            path = self.path(LINKS + VALUES, order, strict=False)
            return None if path is None else MinCount(path, int(rng.integers(1, 3)))
        if kind == 2:
            path = self.path(LINKS + VALUES, order, strict=True)
            return None if path is None else MaxCount(path, int(rng.integers(0, 2)))
        if kind == 3:
            path = self.path(LINKS, order, strict=True)
            classes = self.allowed(CLASSES, order, strict=True)
            return None if path is None or not classes else ClassMember(path, pick(rng, classes))
        path = self.path(VALUES, order, strict=True)
        others = self.allowed(VALUES, order, strict=True)
        return None if path is None or not others else LessThan(path, pick(rng, others))

    def rule(self, index):
        rng = self.rng
        choice = int(rng.integers(3))
        if choice == 2:
            cls = pick(rng, CLASSES)
            predicate, order = RDF_TYPE, self.level[cls]
            obj = Constant(cls)
        else:
            predicate = pick(rng, LINKS if choice == 0 else VALUES)
            order = self.level[predicate]
            obj = self.node_spec(order, LINKS if choice == 0 else VALUES)
        targets = self.allowed(CLASSES, order, strict=False)
        if not targets:
            return None
        subject_path = self.path(LINKS, order, strict=False) if rng.integers(2) else None
        condition = conjunction(a for a in (self.atom(order) for _ in range(int(rng.integers(0, 3))))
                                if a is not None)
        rule = TripleRule(
            id=f"rule{index}",
            subject=This() if subject_path is None else PathFrom(subject_path),
            predicate=predicate,
            object=obj,
            order=order,
            condition=condition,
        )
        return NodeShape(id=ex(f"S{index}"), target_class=pick(rng, targets), rules=(rule,))

    def node_spec(self, order, ends):
        kind = int(self.rng.integers(3))
        if kind == 0:
            path = self.path(ends, order, strict=False)
            if path is not None:
                return PathFrom(path)
        if kind == 1 and ends == LINKS:
            return This()
        return Constant(pick(self.rng, INTEGERS if ends == VALUES else NODES))

    def document(self, max_rules=5):
        shapes = [self.rule(i) for i in range(int(self.rng.integers(1, max_rules + 1)))]
        return ShapesDocument(tuple(s for s in shapes if s is not None))


@pytest.fixture
def random_instances(rng):
    """(graph, constraints) pairs over a small shared vocabulary"""
    def generate(count=RANDOM_INSTANCES):
        for _ in range(count):
            graph = random_graph(rng)
            constraints = [random_constraint(rng) for _ in range(int(rng.integers(1, 4)))]
            yield graph, constraints
    return generate


@pytest.fixture
def random_rule_sets(rng):
    """(graph, ShapesDocument) pairs whose rules pass stratification"""
    def generate(count=RANDOM_INSTANCES):
        for _ in range(count):
            yield random_graph(rng), RandomRules(rng).document()
    return generate


# --- brute-force reference evaluator, straight from the constraint definitions ---

def reference_values(triples, focus, steps):
    current = {focus}
    for predicate in steps:
        current = {o for (s, p, o) in triples if p == predicate and s in current}
    return current


def reference_check(triples, focus, constraint):
    c = constraint
    if isinstance(c, Not):
        return not reference_check(triples, focus, c.inner)
    if isinstance(c, And):
        return all(reference_check(triples, focus, item) for item in c.items)
    found = reference_values(triples, focus, c.path.steps)
    if isinstance(c, HasValue):
        return c.value in found
    if isinstance(c, MinCount):
        return len(found) >= c.n
    if isinstance(c, MaxCount):
        return len(found) <= c.n
    if isinstance(c, ClassMember):
        return all((v, RDF_TYPE, c.cls) in triples for v in found)
    if isinstance(c, LessThan):
        others = reference_values(triples, focus, (c.other,))
        return all(v.to_python() < w.to_python() for v in found for w in others)
    if isinstance(c, Equals):
        return found == reference_values(triples, focus, (c.other,))
    return all(isinstance(v, Literal) and v.datatype == c.datatype.value for v in found)


@pytest.fixture
def reference():
    return reference_check
