"""NormCompiler class: obligations and permissions become shapes, constitutive norms become rules"""
import logging

from python_src.errors import CompileError, StratificationError
from python_src.inference.stratify import check_stratification
from python_src.shacl.model import (
    ClassMember, Equals, HasValue, LessThan, MaxCount, MinCount, NodeShape, Not, Severity,
    ShapesDocument, TripleRule, conjunction,
)
from .model import CardinalityAtom, ClassAtom, CompareAtom, NafAtom, NormKind, ValueAtom

logger = logging.getLogger(__name__)


class NormCompiler:
    def __init__(self, norm_set):
        self.norm_set = norm_set

    def run(self):
        # sorted by IRI, the order parse_shapes reads them back in
        shapes = tuple(sorted((self.compile_norm(norm) for norm in self.norm_set.norms), key=lambda s: s.id))
        try:
            doc = ShapesDocument(shapes)
        except ValueError as exc:
            raise CompileError([n.id for n in self.norm_set.norms], str(exc)) from exc
        try:
            check_stratification(doc)
        except StratificationError as exc:
            raise CompileError([exc.negating_rule, exc.emitting_rule], str(exc)) from exc
        logger.info("compiled %d norms into %d shapes", len(self.norm_set), len(doc))
        return doc

    def compile_norm(self, norm):
        shape_id = self.norm_set.shape_iri(norm)
        condition = conjunction(self.compile_atom(atom) for atom in norm.antecedent)

        if norm.kind is NormKind.CONSTITUTIVE:
            consequent = norm.consequent
            rule = TripleRule(
                id=norm.id,
                subject=consequent.subject,
                predicate=consequent.predicate,
                object=consequent.object,
                order=norm.order,
                condition=condition,
            )
            return NodeShape(id=shape_id, target_class=norm.target, rules=(rule,))

        required = HasValue(norm.consequent.path, norm.consequent.value)
        if condition is not None:
            # "given a, b is required" holds unless a holds and b does not
            required = Not(conjunction([condition, Not(required)]))
        severity = Severity.VIOLATION if norm.kind is NormKind.OBLIGATION else Severity.INFO
        return NodeShape(id=shape_id, target_class=norm.target, constraints=(required,), severity=severity)

    def compile_atom(self, atom):
        if isinstance(atom, NafAtom):
            return Not(self.compile_atom(atom.inner))
        if isinstance(atom, ClassAtom):
            return ClassMember(atom.path, atom.cls)
        if isinstance(atom, CompareAtom):
            kind = LessThan if atom.kind == "less-than" else Equals
            return kind(atom.path, atom.other)
        if isinstance(atom, CardinalityAtom):
            kind = MinCount if atom.kind == "min" else MaxCount
            return kind(atom.path, atom.n)
        if isinstance(atom, ValueAtom):
            return HasValue(atom.path, atom.value)
        raise TypeError(f"unknown atom {atom!r}")


def compile_norms(norm_set):
    """Convenience function to compile a NormSet into a ShapesDocument"""
    return NormCompiler(norm_set).run()
