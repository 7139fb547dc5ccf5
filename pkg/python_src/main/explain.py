"""Explainer class: which legal authorities ruled on the communications about a processing"""
import logging
from dataclasses import dataclass
from typing import Tuple

from python_src.input.term import RDF_TYPE, Term
from .config import ExplanationVocabulary

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Explanation:
    communication: Term
    rejected_by: Tuple[Term, ...] = ()
    supported_by: Tuple[Term, ...] = ()

    def to_dict(self, compact=str):
        return {
            "communication": compact(self.communication),
            "rejected_by": [compact(a) for a in self.rejected_by],
            "supported_by": [compact(a) for a in self.supported_by],
        }


class Explainer:
    def __init__(self, graph, vocabulary=None):
        self.graph = graph
        self.vocabulary = vocabulary or ExplanationVocabulary()

    def run(self, focus):
        """One entry per communication whose theme is `focus`, sorted by communication"""
        v = self.vocabulary
        entries = []
        for communication in sorted(self.graph.objects(focus, v.theme_of_iri)):
            if (communication, RDF_TYPE, v.communication_iri) not in self.graph:
                logger.debug("%s is a theme of %s, which is not a communication", focus, communication)
                continue
            entries.append(Explanation(
                communication=communication,
                rejected_by=tuple(sorted(self.graph.objects(communication, v.rejected_by_iri))),
                supported_by=tuple(sorted(self.graph.objects(communication, v.supported_by_iri))),
            ))
        return entries


def explain(graph, focus, vocabulary=None):
    """Convenience function: explanation entries for one processing node"""
    return Explainer(graph, vocabulary).run(focus)
