# Main package: compliance check pipeline, explanations and reports
from .config import CheckOptions, ExplanationVocabulary, SHRIOL, resolve_log_level
from .explain import Explanation, Explainer, explain
from .report import ComplianceReport
from .check import ComplianceChecker, check, exit_code
