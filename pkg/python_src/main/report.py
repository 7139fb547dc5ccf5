"""ComplianceReport: the outcome of one check, rendered as JSON or as text tables"""
import json
from dataclasses import dataclass, field
from functools import partial
from typing import Dict, List

import pandas as pd

from python_src.evaluation.report import ValidationResult
from python_src.evaluation.statistics import ResultStatistics
from python_src.inference.engine import Derivation
from python_src.input.graph import DEFAULT_PREFIXES, compact_term
from python_src.input.term import Term, Triple
from .explain import Explanation


@dataclass
class ComplianceReport:
    conforms: bool
    violations: List[ValidationResult] = field(default_factory=list)
    info: List[ValidationResult] = field(default_factory=list)
    explanations: Dict[Term, List[Explanation]] = field(default_factory=dict)
    inferred: int = 0
    provenance: Dict[Triple, Derivation] = field(default_factory=dict, compare=False, repr=False)
    prefixes: Dict[str, str] = field(default_factory=lambda: dict(DEFAULT_PREFIXES), compare=False, repr=False)

    @classmethod
    def from_validation(cls, validation, inference, explanations=None):
        return cls(
            conforms=validation.conforms,
            violations=validation.violations(),
            info=validation.infos(),
            explanations=dict(explanations or {}),
            inferred=len(inference.provenance),
            provenance=dict(inference.provenance),
            prefixes=dict(inference.graph.prefixes),
        )

    @property
    def exit_code(self):
        return 0 if self.conforms else 1

    def compact(self, term):
        return compact_term(self.prefixes, term)

    def result_entry(self, result):
        return {
            "shape": self.compact(result.shape_id),
            "focus": self.compact(result.focus_node),
            "message": result.message,
        }

    def to_dict(self):
        return {
            "conforms": self.conforms,
            "violations": [self.result_entry(r) for r in self.violations],
            "info": [self.result_entry(r) for r in self.info],
            "explanations": {
                self.compact(focus): [e.to_dict(self.compact) for e in entries]
                for focus, entries in sorted(self.explanations.items())
            },
            "inferred": self.inferred,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def to_text(self, trace=False):
        lines = [
            f"Conforms: {'yes' if self.conforms else 'no'}",
            f"Inferred triples: {self.inferred}",
        ]
        for title, results in (("Violations", self.violations), ("Info", self.info)):
            lines += ["", f"{title} ({len(results)})"]
            if results:
                frame = ResultStatistics(results, self.compact).results_frame()
                lines.append(frame.drop(columns="severity").to_string(index=False))

        stats = ResultStatistics(self.violations + self.info, self.compact)
        summary = stats.shape_summary()
        if not summary.empty:
            lines += ["", "Results per shape", summary.to_string(index=False)]
            counts = stats.focus_counts().rename_axis("focus").reset_index(name="results")
            lines += ["", "Results per focus node", counts.to_string(index=False)]

        if self.explanations:
            lines += ["", "Explanations"]
            for focus, entries in sorted(self.explanations.items()):
                lines.append(f"  {self.compact(focus)}")
                if not entries:
                    lines.append("    no communications")
                for entry in entries:
                    described = entry.to_dict(self.compact)
                    lines.append(
                        f"    {described['communication']}: "
                        f"rejected by {', '.join(described['rejected_by']) or 'none'}; "
                        f"supported by {', '.join(described['supported_by']) or 'none'}"
                    )

        if trace:
            lines += ["", "Inferred triples", self.trace_frame().to_string(index=False)]
        return "\n".join(lines) + "\n"

    def trace_frame(self):
        """Every inferred triple with the rule, order and focus node that produced it"""
        name = partial(compact_term, self.prefixes)
        rows = [{
            "subject": name(t.subject),
            "predicate": name(t.predicate),
            "object": name(t.object),
            "rule": d.rule_id,
            "order": d.order,
            "focus": name(d.focus),
        } for t, d in sorted(self.provenance.items())]
        return pd.DataFrame(rows, columns=["subject", "predicate", "object", "rule", "order", "focus"])
