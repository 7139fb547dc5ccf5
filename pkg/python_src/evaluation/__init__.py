# Evaluation package: validation of graphs against shapes
from .report import ValidationReport, ValidationResult
from .evaluation import Validator, validate, validate_cardinality_restrictions
from .statistics import ResultStatistics
