# Inference package: stratified execution of triple rules
from .stratify import DependencyKey, RuleGroup, check_stratification, dependency_graph, stratify
from .engine import Derivation, InferenceResult, RuleEngine, execute_rules
