"""RuleEngine class: stratified forward chaining of triple rules"""
import logging
from dataclasses import dataclass, field
from typing import Dict

from python_src.errors import InferenceError
from python_src.input.graph import Graph, evaluate_path
from python_src.input.term import Literal, RDF_TYPE, Term, Triple
from python_src.shacl.constraints import ConstraintChecker
from python_src.shacl.model import Constant, PathFrom, This
from .stratify import stratify

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Derivation:
    rule_id: str
    order: int
    focus: Term


@dataclass
class InferenceResult:
    graph: Graph
    provenance: Dict[Triple, Derivation] = field(default_factory=dict)

    def inferred(self):
        return sorted(self.provenance)


class RuleEngine:
    def __init__(self, doc):
        self.doc = doc
        self.groups = stratify(doc)

    def run(self, data):
        """Execute every rule group in ascending order, each to a fixpoint"""
        graph = data.copy()
        result = InferenceResult(graph)
        bound = self.inference_bound(data)

        for group in self.groups:
            passes = 0
            while True:
                passes += 1
                added = self.run_pass(graph, group, result.provenance)
                if len(result.provenance) > bound:
                    raise InferenceError(f"more than {bound} inferred triples at order {group.order}")
                if not added:
                    break
            logger.info("order %d: %d rules, %d passes, %d inferred so far",
                        group.order, len(group.members), passes, len(result.provenance))
        return result

    def run_pass(self, graph, group, provenance):
        """One pass over a group's rules, committing each new triple as it is emitted"""
        checker = ConstraintChecker(graph)
        added = 0
        for shape, rule in group.members:
            for focus in sorted(graph.subjects(RDF_TYPE, shape.target_class)):
                if rule.condition is not None and not checker.check(focus, rule.condition):
                    continue
                for triple in self.emit(graph, focus, rule):
                    if graph.add(triple):
                        provenance[triple] = Derivation(rule.id, rule.order, focus)
                        added += 1
        return added

    def emit(self, graph, focus, rule):
        subjects = self.spec_nodes(graph, focus, rule.subject)
        objects = self.spec_nodes(graph, focus, rule.object)
        triples = []
        for s in sorted(subjects):
            if isinstance(s, Literal):
                logger.debug("rule %s: skipping literal subject %s", rule.id, s)
                continue
            triples.extend(Triple(s, rule.predicate, o) for o in sorted(objects))
        return triples

    @staticmethod
    def spec_nodes(graph, focus, spec):
        if isinstance(spec, This):
            return {focus}
        if isinstance(spec, PathFrom):
            return evaluate_path(graph, focus, spec.path)
        if isinstance(spec, Constant):
            return {spec.term}
        raise TypeError(f"unknown node spec {spec!r}")

    def inference_bound(self, data):
        """Upper bound on inferred triples: |nodes|^2 x |rule predicates|"""
        constants = {spec.term for _, rule in self.doc.rules()
                     for spec in (rule.subject, rule.object) if isinstance(spec, Constant)}
        predicates = {rule.predicate for _, rule in self.doc.rules()}
        nodes = len(data.nodes() | constants)
        return nodes * nodes * len(predicates)


def execute_rules(data, doc):
    """Convenience function: run all rules of `doc` over a copy of `data`"""
    return RuleEngine(doc).run(data)
