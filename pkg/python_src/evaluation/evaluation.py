"""Validator class: checks the constraint side of a ShapesDocument against a graph"""
import logging

from python_src.input.path import Predicate
from python_src.input.term import RDF_TYPE
from python_src.shacl.constraints import ConstraintChecker
from python_src.shacl.model import And, ClassMember, Datatype, Equals, HasValue, LessThan, MaxCount, MinCount, Not
from .report import ValidationReport, ValidationResult

logger = logging.getLogger(__name__)


class Validator:
    def __init__(self, graph):
        self.graph = graph
        self.checker = ConstraintChecker(graph)

    def validate(self, doc):
        """One result per (focus node, violated constraint), sorted by shape then focus"""
        results = []
        for shape in doc.shapes:
            focus_nodes = sorted(self.graph.subjects(RDF_TYPE, shape.target_class))
            for focus in focus_nodes:
                for constraint in shape.constraints:
                    if self.checker.check(focus, constraint):
                        continue
                    results.append(ValidationResult(
                        focus_node=focus,
                        shape_id=shape.id,
                        constraint=self.describe(constraint),
                        severity=shape.severity,
                        message=self.message(focus, constraint),
                        value=self.offending_value(focus, constraint),
                    ))
            logger.debug("shape %s: %d focus nodes", shape.id, len(focus_nodes))
        results.sort(key=ValidationResult.sort_key)
        report = ValidationReport(results)
        logger.info("validation: %d violations, %d info results",
                    len(report.violations()), len(report.infos()))
        return report

    def name(self, term):
        return self.graph.compact(term)

    def path_name(self, path):
        if isinstance(path, Predicate):
            return self.name(path.iri)
        return "(" + " ".join(self.name(step) for step in path.steps) + ")"

    def describe(self, c):
        """Short constraint description, e.g. hasValue(shRIOL:is-lawful, true)"""
        if isinstance(c, Not):
            return f"not({self.describe(c.inner)})"
        if isinstance(c, And):
            return "and(" + ", ".join(self.describe(item) for item in c.items) + ")"
        argument = {
            HasValue: lambda: self.name(c.value),
            MinCount: lambda: str(c.n),
            MaxCount: lambda: str(c.n),
            ClassMember: lambda: self.name(c.cls),
            LessThan: lambda: self.name(c.other),
            Equals: lambda: self.name(c.other),
            Datatype: lambda: self.name(c.datatype),
        }[type(c)]()
        return f"{c.component}({self.path_name(c.path)}, {argument})"

    def values(self, focus, path):
        return sorted(self.checker.values(focus, path))

    def message(self, focus, c):
        if isinstance(c, Not):
            return f"node must not satisfy {self.describe(c.inner)}"
        if isinstance(c, And):
            return f"node must satisfy all of {self.describe(c)}"

        path = self.path_name(c.path)
        found = self.values(focus, c.path)
        shown = ", ".join(self.name(v) for v in found) or "none"
        if isinstance(c, HasValue):
            return f"{path} must include {self.name(c.value)} (found: {shown})"
        if isinstance(c, MinCount):
            return f"{path} must have at least {c.n} value(s) (found {len(found)})"
        if isinstance(c, MaxCount):
            return f"{path} must have at most {c.n} value(s) (found {len(found)})"
        if isinstance(c, ClassMember):
            return f"{path} values must be instances of {self.name(c.cls)} (found: {shown})"
        if isinstance(c, LessThan):
            others = ", ".join(self.name(v) for v in sorted(self.graph.objects(focus, c.other))) or "none"
            return f"{path} values must be less than {self.name(c.other)} values {others} (found: {shown})"
        if isinstance(c, Equals):
            others = ", ".join(self.name(v) for v in sorted(self.graph.objects(focus, c.other))) or "none"
            return f"{path} values must equal {self.name(c.other)} values {others} (found: {shown})"
        return f"{path} values must have datatype {self.name(c.datatype)} (found: {shown})"

    def offending_value(self, focus, c):
        if isinstance(c, ClassMember):
            bad = [v for v in self.values(focus, c.path) if (v, RDF_TYPE, c.cls) not in self.graph]
        elif isinstance(c, LessThan):
            bad = self.checker.less_than_offenders(focus, c)
        elif isinstance(c, Datatype):
            bad = [v for v in self.values(focus, c.path) if not self.checker.check_datatype_value(v, c)]
        else:
            bad = []
        return bad[0] if bad else None


def validate(graph, doc):
    """Convenience function to validate `graph` against the shapes in `doc`"""
    return Validator(graph).validate(doc)


def validate_cardinality_restrictions(graph, doc):
    """Validate ontology restriction shapes (sh:minCount/sh:maxCount/sh:class)"""
    return Validator(graph).validate(doc)
