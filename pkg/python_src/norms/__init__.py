# Norms package: obligations, permissions and constitutive rules, and their compilation to shapes
from .model import (
    Assert, CardinalityAtom, ClassAtom, CompareAtom, NafAtom, NormKind, NormRule, NormSet,
    Require, ValueAtom,
)
from .parser import NormReader, parse_norms, read_norms
from .compiler import NormCompiler, compile_norms
