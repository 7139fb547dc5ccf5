"""ConstraintChecker class for evaluating constraints at a focus node"""
from python_src.errors import ConstraintTypeError
from python_src.input.graph import evaluate_path
from python_src.input.term import Literal, RDF_TYPE
from .model import And, ClassMember, Datatype, Equals, HasValue, LessThan, MaxCount, MinCount, Not


class ConstraintChecker:
    def __init__(self, graph):
        self.graph = graph
        self._dispatch = {
            HasValue: self.check_has_value,
            MinCount: self.check_min_count,
            MaxCount: self.check_max_count,
            ClassMember: self.check_class,
            LessThan: self.check_less_than,
            Equals: self.check_equals,
            Datatype: self.check_datatype,
            Not: self.check_not,
            And: self.check_and,
        }

    def check(self, focus, constraint):
        """True when `focus` conforms to `constraint`"""
        try:
            handler = self._dispatch[type(constraint)]
        except KeyError:
            raise TypeError(f"unsupported constraint {constraint!r}") from None
        return handler(focus, constraint)

    def values(self, focus, path):
        return evaluate_path(self.graph, focus, path)

    def check_has_value(self, focus, c):
        return c.value in self.values(focus, c.path)

    def check_min_count(self, focus, c):
        return len(self.values(focus, c.path)) >= c.n

    def check_max_count(self, focus, c):
        return len(self.values(focus, c.path)) <= c.n

    def check_class(self, focus, c):
        return all((v, RDF_TYPE, c.cls) in self.graph for v in self.values(focus, c.path))

    def check_less_than(self, focus, c):
        return not self.less_than_offenders(focus, c)

    def less_than_offenders(self, focus, c):
        """Values at the path that are not below every value of the other predicate"""
        left = sorted(self.values(focus, c.path))
        right = sorted(self.graph.objects(focus, c.other))
        if not left or not right:
            return []
        bounds = [self._as_int(focus, c, w) for w in right]
        return [v for v in left if self._as_int(focus, c, v) >= min(bounds)]

    def check_equals(self, focus, c):
        return self.values(focus, c.path) == self.graph.objects(focus, c.other)

    def check_datatype(self, focus, c):
        return all(self.check_datatype_value(v, c) for v in self.values(focus, c.path))

    @staticmethod
    def check_datatype_value(value, c):
        return isinstance(value, Literal) and value.datatype == c.datatype.value

    def check_not(self, focus, c):
        return not self.check(focus, c.inner)

    def check_and(self, focus, c):
        return all(self.check(focus, item) for item in c.items)

    @staticmethod
    def _as_int(focus, c, term):
        if not (isinstance(term, Literal) and term.is_integer):
            raise ConstraintTypeError(focus, c, term)
        return int(term.lexical)


def check_constraint(graph, focus, constraint):
    """Convenience function: does `focus` conform to `constraint` in `graph`"""
    return ConstraintChecker(graph).check(focus, constraint)
