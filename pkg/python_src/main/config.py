"""Options for one compliance check and the vocabulary used by explanations"""
import logging
import os
from dataclasses import dataclass, field
from typing import Optional, Tuple

from python_src.input.term import Iri

SHRIOL = "http://www.example.org/shRIOL#"

LOG_LEVEL_ENV = "NORMCHECK_LOG_LEVEL"
DEFAULT_LOG_LEVEL = "WARNING"
FORMATS = ("text", "json")


@dataclass(frozen=True)
class ExplanationVocabulary:
    """Predicates walked from a processing node to the authorities ruling on its communications."""

    namespace: str = SHRIOL
    theme_of: str = "is-theme-of"
    rejected_by: str = "is-rejected-by"
    supported_by: str = "is-supported-by"
    communication: str = "Communicate"
    trigger: str = "is-transparent"

    def iri(self, local):
        return Iri(self.namespace + local)

    @property
    def theme_of_iri(self):
        return self.iri(self.theme_of)

    @property
    def rejected_by_iri(self):
        return self.iri(self.rejected_by)

    @property
    def supported_by_iri(self):
        return self.iri(self.supported_by)

    @property
    def communication_iri(self):
        return self.iri(self.communication)

    @property
    def trigger_iri(self):
        return self.iri(self.trigger)


@dataclass(frozen=True)
class CheckOptions:
    data_files: Tuple[str, ...]
    norms_file: Optional[str] = None
    shapes_file: Optional[str] = None
    restrictions_files: Tuple[str, ...] = ()
    format: str = "text"
    explain: bool = False
    infer: bool = True
    dump_inferred: Optional[str] = None
    emit_shapes: Optional[str] = None
    trace: bool = False
    log_level: str = DEFAULT_LOG_LEVEL
    vocabulary: ExplanationVocabulary = field(default_factory=ExplanationVocabulary)

    def __post_init__(self):
        if not self.data_files:
            raise ValueError("at least one data file is required")
        if (self.norms_file is None) == (self.shapes_file is None):
            raise ValueError("exactly one of a norms file or a shapes file is required")
        if self.format not in FORMATS:
            raise ValueError(f"unknown output format {self.format!r}")

    @classmethod
    def from_args(cls, args):
        """Build options from an argparse namespace"""
        return cls(
            data_files=tuple(args.data),
            norms_file=args.norms,
            shapes_file=args.shapes,
            restrictions_files=tuple(args.restrictions or ()),
            format=args.format,
            explain=args.explain,
            infer=not args.no_infer,
            dump_inferred=args.dump_inferred,
            emit_shapes=args.emit_shapes,
            trace=args.trace,
            log_level=resolve_log_level(args.log_level),
        )


def resolve_log_level(requested=None):
    """--log-level wins over the environment, which wins over the default"""
    level = (requested or os.environ.get(LOG_LEVEL_ENV) or DEFAULT_LOG_LEVEL).upper()
    if not isinstance(logging.getLevelName(level), int):
        raise ValueError(f"unknown log level {level!r}")
    return level
