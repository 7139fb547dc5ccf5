"""ComplianceChecker class: data + norms (or shapes) -> inference -> validation -> report"""
import logging

from python_src.errors import ComplianceError, ShapeParseError
from python_src.evaluation.evaluation import validate, validate_cardinality_restrictions
from python_src.inference.engine import InferenceResult, RuleEngine
from python_src.inference.stratify import DependencyKey, constraint_keys
from python_src.input.reader import read_turtle, read_turtle_files
from python_src.input.writer import write_turtle
from python_src.norms.compiler import compile_norms
from python_src.norms.parser import read_norms
from python_src.shacl.model import ShapesDocument
from python_src.shacl.parser import parse_shapes
from python_src.shacl.writer import shapes_to_graph
from .explain import Explainer
from .report import ComplianceReport

logger = logging.getLogger(__name__)

EXIT_CONFORMS = 0
EXIT_VIOLATIONS = 1
EXIT_ERROR = 2


class ComplianceChecker:
    def __init__(self, options):
        self.options = options
        self.vocabulary = options.vocabulary

    def run(self):
        """Run the whole pipeline once and build the report"""
        options = self.options
        data = read_turtle_files(options.data_files)
        logger.info("data: %d triples from %d file(s)", len(data), len(options.data_files))

        doc = self.load_shapes()
        if options.emit_shapes:
            write_turtle(shapes_to_graph(doc, data.prefixes), options.emit_shapes)
            logger.info("wrote %d shapes to %s", len(doc), options.emit_shapes)
        restrictions = self.load_restrictions(doc)
        combined = doc.union(restrictions)

        if options.infer:
            inference = RuleEngine(combined).run(data)
        else:
            logger.info("rule execution skipped")
            inference = InferenceResult(data.copy())
        if options.dump_inferred:
            write_turtle(inference.graph, options.dump_inferred)

        validation = validate(inference.graph, doc)
        if len(restrictions):
            validation = validation.merge(validate_cardinality_restrictions(inference.graph, restrictions))

        explanations = self.explanations(inference.graph, combined, validation) \
            if options.explain else {}
        report = ComplianceReport.from_validation(validation, inference, explanations)
        logger.info("%d violations, %d info results", len(report.violations), len(report.info))
        return report

    def load_shapes(self):
        if self.options.norms_file is not None:
            return compile_norms(read_norms(self.options.norms_file))
        return parse_shapes(read_turtle(self.options.shapes_file))

    def load_restrictions(self, doc):
        if not self.options.restrictions_files:
            return ShapesDocument()
        restrictions = parse_shapes(read_turtle_files(self.options.restrictions_files))
        taken = {shape.id for shape in doc.shapes}
        for shape in restrictions.shapes:
            if shape.id in taken:
                raise ShapeParseError(shape.id, "restriction shape reuses the id of a norm shape")
        return restrictions

    def explanations(self, graph, doc, validation):
        """Explanation entries for the focus nodes of violations that read the trigger predicate"""
        trigger = DependencyKey("predicate", self.vocabulary.trigger_iri)
        triggering = {shape.id for shape in doc.shapes
                      if any(trigger in constraint_keys(c) for c in shape.constraints)}
        explainer = Explainer(graph, self.vocabulary)
        return {r.focus_node: explainer.run(r.focus_node)
                for r in validation.violations() if r.shape_id in triggering}


def exit_code(report):
    return EXIT_ERROR if report is None else report.exit_code


def check(options):
    """Convenience function: (report, exit code); the report is None when the check failed"""
    try:
        report = ComplianceChecker(options).run()
    except (ComplianceError, OSError) as exc:
        logger.error("error: %s", exc)
        return None, EXIT_ERROR
    return report, exit_code(report)
