"""Indexed in-memory RDF graph"""
import itertools
import logging
from collections import defaultdict

import networkx as nx
from networkx.algorithms.isomorphism import categorical_multiedge_match

from .term import BlankNode, Triple, RDF, RDFS, XSD, SH

logger = logging.getLogger(__name__)

DEFAULT_PREFIXES = {
    "rdf": RDF,
    "rdfs": RDFS,
    "xsd": XSD,
    "sh": SH,
}

# Fresh blank-node scopes, one per parsed document or renamed merge.
_scope_counter = itertools.count(1)


def new_scope():
    return f"g{next(_scope_counter)}"


def _index():
    return defaultdict(lambda: defaultdict(set))


class Graph:
    """A set of triples with SPO, POS and OSP indexes plus a prefix table."""

    def __init__(self, triples=(), prefixes=None):
        self._spo = _index()
        self._pos = _index()
        self._osp = _index()
        self._size = 0
        self.prefixes = dict(DEFAULT_PREFIXES if prefixes is None else prefixes)
        for triple in triples:
            self.add(triple)

    def add(self, triple):
        """Insert a triple; returns True when the graph changed."""
        s, p, o = triple
        if o in self._spo[s][p]:
            return False
        self._spo[s][p].add(o)
        self._pos[p][o].add(s)
        self._osp[o][s].add(p)
        self._size += 1
        return True

    def add_all(self, triples):
        return sum(1 for t in triples if self.add(t))

    def remove(self, triple):
        s, p, o = triple
        if o not in self._spo.get(s, {}).get(p, ()):
            return False
        self._spo[s][p].discard(o)
        self._pos[p][o].discard(s)
        self._osp[o][s].discard(p)
        self._size -= 1
        return True

    def bind(self, prefix, namespace):
        self.prefixes[prefix] = namespace

    def __contains__(self, triple):
        s, p, o = triple
        return o in self._spo.get(s, {}).get(p, ())

    def __len__(self):
        return self._size

    def __iter__(self):
        return iter(self.match())

    def _unsorted(self, s=None, p=None, o=None):
        if s is not None:
            by_p = self._spo.get(s, {})
            if p is not None:
                objects = by_p.get(p, ())
                if o is not None:
                    return [Triple(s, p, o)] if o in objects else []
                return [Triple(s, p, x) for x in objects]
            if o is not None:
                return [Triple(s, x, o) for x in self._osp.get(o, {}).get(s, ())]
            return [Triple(s, x, y) for x, ys in by_p.items() for y in ys]
        if p is not None:
            by_o = self._pos.get(p, {})
            if o is not None:
                return [Triple(x, p, o) for x in by_o.get(o, ())]
            return [Triple(x, p, y) for y, xs in by_o.items() for x in xs]
        if o is not None:
            return [Triple(x, y, o) for x, ys in self._osp.get(o, {}).items() for y in ys]
        return [Triple(x, y, z) for x, by_p in self._spo.items()
                for y, zs in by_p.items() for z in zs]

    def match(self, s=None, p=None, o=None):
        """Triples agreeing with every bound position, in sorted order."""
        return sorted(self._unsorted(s, p, o))

    def objects(self, s, p):
        return set(self._spo.get(s, {}).get(p, ()))

    def subjects(self, p, o):
        return set(self._pos.get(p, {}).get(o, ()))

    def value(self, s, p):
        """The single object of (s, p), or None when there is none."""
        objects = sorted(self.objects(s, p))
        return objects[0] if objects else None

    def nodes(self):
        """Every term appearing in subject or object position."""
        subjects = {s for s, by_p in self._spo.items() if any(by_p.values())}
        return subjects | {o for o, by_s in self._osp.items() if any(by_s.values())}

    def predicates(self):
        return {p for p, by_o in self._pos.items() if any(by_o.values())}

    def copy(self):
        return Graph(self._unsorted(), self.prefixes)

    def blank_nodes(self):
        return {t for t in self.nodes() if isinstance(t, BlankNode)}

    def merge(self, other):
        """Add `other`'s triples with its blank nodes renamed apart from ours."""
        scope = new_scope()
        renamed = {b: BlankNode(f"{scope}b{i}") for i, b in enumerate(sorted(other.blank_nodes()))}

        def rename(term):
            return renamed.get(term, term)

        added = self.add_all(Triple(rename(s), p, rename(o)) for s, p, o in other._unsorted())
        for prefix, namespace in other.prefixes.items():
            self.prefixes.setdefault(prefix, namespace)
        logger.debug("merged %d triples (%d blank nodes renamed)", added, len(renamed))
        return self

    def compact(self, term):
        """CURIE form of an IRI when a prefix applies, else the term's N-Triples form."""
        return compact_term(self.prefixes, term)


def compact_term(prefixes, term):
    value = getattr(term, "value", None)
    if value is not None:
        for prefix, namespace in sorted(prefixes.items(), key=lambda kv: -len(kv[1])):
            if value.startswith(namespace) and len(value) > len(namespace):
                return f"{prefix}:{value[len(namespace):]}"
    return str(term)


def evaluate_path(g, start, path):
    """Nodes reachable from `start` by following the path's predicates in order."""
    frontier = {start}
    for predicate in path.steps:
        frontier = {o for node in frontier for o in g.objects(node, predicate)}
        if not frontier:
            break
    return frontier


def to_networkx(g):
    """Multi-digraph view in which blank nodes are anonymous."""
    view = nx.MultiDiGraph()
    for node in g.nodes():
        view.add_node(node, label=None if isinstance(node, BlankNode) else node)
    for s, p, o in g._unsorted():
        view.add_edge(s, o, predicate=p)
    return view


def isomorphic(g1, g2):
    """Graph equality up to blank-node renaming."""
    if len(g1) != len(g2):
        return False
    return nx.is_isomorphic(
        to_networkx(g1),
        to_networkx(g2),
        node_match=lambda a, b: a["label"] == b["label"],
        edge_match=categorical_multiedge_match("predicate", None),
    )
