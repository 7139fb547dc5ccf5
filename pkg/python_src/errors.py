"""Exception hierarchy shared by every package"""


class ComplianceError(Exception):
    """Base class for all errors raised while checking compliance."""


class TurtleError(ComplianceError):
    pass


class TurtleSyntaxError(TurtleError):
    def __init__(self, line, column, token, reason="syntax error"):
        self.line = line
        self.column = column
        self.token = token
        self.reason = reason
        super().__init__(f"{reason} at line {line}, column {column} near {token!r}")


class UnknownPrefixError(TurtleError):
    def __init__(self, prefix, line=None):
        self.prefix = prefix
        self.line = line
        where = f" at line {line}" if line is not None else ""
        super().__init__(f"unknown prefix {prefix!r}{where}")


class MalformedLiteralError(TurtleError):
    def __init__(self, lexical, datatype):
        self.lexical = lexical
        self.datatype = datatype
        super().__init__(f"malformed literal {lexical!r} for datatype <{datatype}>")


class ShapeParseError(ComplianceError):
    def __init__(self, node, reason):
        self.node = node
        self.reason = reason
        super().__init__(f"{reason} (at {node})")


class UnknownComponentError(ShapeParseError):
    def __init__(self, node, predicate):
        self.predicate = predicate
        super().__init__(node, f"unknown constraint component <{predicate}>")


class ConstraintTypeError(ComplianceError):
    def __init__(self, focus, constraint, value):
        self.focus = focus
        self.constraint = constraint
        self.value = value
        super().__init__(
            f"cannot compare non-integer value {value} at focus node {focus} "
            f"({constraint})"
        )


class StratificationError(ComplianceError):
    def __init__(self, negating_rule, emitting_rule, key):
        self.negating_rule = negating_rule
        self.emitting_rule = emitting_rule
        self.key = key
        super().__init__(
            f"rule {negating_rule!r} negates {key} which rule {emitting_rule!r} "
            f"emits at the same or a later order"
        )


class InferenceError(ComplianceError):
    pass


class NormSyntaxError(ComplianceError):
    def __init__(self, line, column, reason):
        self.line = line
        self.column = column
        self.reason = reason
        super().__init__(f"{reason} at line {line}, column {column}")


class DuplicateNormError(ComplianceError):
    def __init__(self, norm_id):
        self.norm_id = norm_id
        super().__init__(f"duplicate norm id {norm_id!r}")


class CompileError(ComplianceError):
    def __init__(self, norm_ids, reason):
        self.norm_ids = tuple(norm_ids)
        self.reason = reason
        super().__init__(f"cannot compile norms {', '.join(self.norm_ids)}: {reason}")


class InputEncodingError(ComplianceError):
    def __init__(self, path, reason):
        self.path = str(path)
        self.reason = reason
        super().__init__(f"{self.path} is not valid UTF-8: {reason}")
