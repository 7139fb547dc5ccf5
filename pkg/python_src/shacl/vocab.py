"""SHACL vocabulary used by the parser and the writer"""
from python_src.input.term import Iri, SH


def sh(local):
    return Iri(SH + local)


NODE_SHAPE = sh("NodeShape")
TRIPLE_RULE = sh("TripleRule")
TARGET_CLASS = sh("targetClass")
PROPERTY = sh("property")
PATH = sh("path")
RULE = sh("rule")
ORDER = sh("order")
CONDITION = sh("condition")
SUBJECT = sh("subject")
PREDICATE = sh("predicate")
OBJECT = sh("object")
THIS = sh("this")
SEVERITY = sh("severity")
VIOLATION = sh("Violation")
INFO = sh("Info")
NOT = sh("not")
AND = sh("and")

HAS_VALUE = sh("hasValue")
MIN_COUNT = sh("minCount")
MAX_COUNT = sh("maxCount")
CLASS = sh("class")
LESS_THAN = sh("lessThan")
EQUALS = sh("equals")
DATATYPE = sh("datatype")

# Non-constraint keys allowed on property nodes.
ANNOTATIONS = frozenset({PATH, sh("name"), sh("description"), sh("message"), sh("order")})

# Keys allowed on shape and condition nodes; any other sh: predicate there is unsupported.
SHAPE_KEYS = frozenset({TARGET_CLASS, RULE, SEVERITY, PROPERTY, NOT, AND,
                        sh("name"), sh("description"), sh("message")})
