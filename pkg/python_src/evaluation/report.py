"""ValidationResult and ValidationReport definitions"""
from dataclasses import dataclass, field
from typing import List, Optional

from python_src.input.term import Iri, Term
from python_src.shacl.model import Severity


@dataclass(frozen=True)
class ValidationResult:
    focus_node: Term
    shape_id: Iri
    constraint: str
    severity: Severity
    message: str
    value: Optional[Term] = None

    def sort_key(self):
        return (self.shape_id, self.focus_node, self.message)


@dataclass
class ValidationReport:
    results: List[ValidationResult] = field(default_factory=list)

    @property
    def conforms(self):
        return not self.violations()

    def violations(self):
        return [r for r in self.results if r.severity is Severity.VIOLATION]

    def infos(self):
        return [r for r in self.results if r.severity is Severity.INFO]

    def merge(self, other):
        return ValidationReport(sorted(self.results + other.results, key=ValidationResult.sort_key))
