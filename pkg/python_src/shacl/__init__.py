# SHACL package: shapes model, constraint checking, shapes parsing and writing
from .model import (
    And, ClassMember, Constant, Datatype, Equals, HasValue, LessThan, MaxCount, MinCount,
    NodeShape, Not, PathFrom, Severity, ShapesDocument, This, TripleRule, conjunction,
)
from .constraints import ConstraintChecker, check_constraint
from .parser import ShapesParser, parse_shapes
from .writer import ShapesWriter, shapes_to_graph
