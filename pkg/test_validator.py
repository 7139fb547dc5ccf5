"""
Tests for validation reports, the brute-force oracle comparison and ontology restrictions
"""
from collections import Counter

import pytest

from conftest import CLASSES, EX, LINKS, NODES, RANDOM_INSTANCES, VALUES, ex, random_graph, random_path, shriol
from python_src.errors import ConstraintTypeError
from python_src.evaluation.evaluation import Validator, validate, validate_cardinality_restrictions
from python_src.evaluation.statistics import ResultStatistics
from python_src.inference.engine import execute_rules
from python_src.input.graph import Graph
from python_src.input.path import make_path
from python_src.input.reader import read_turtle
from python_src.input.term import RDF_TYPE, Triple, integer, string
from python_src.norms.compiler import compile_norms
from python_src.norms.parser import read_norms
from python_src.shacl.constraints import check_constraint
from python_src.shacl.model import HasValue, LessThan, MaxCount, MinCount, NodeShape, Severity, ShapesDocument
from python_src.shacl.parser import parse_shapes


@pytest.fixture
def inferred(scenario, norms_path):
    doc = compile_norms(read_norms(norms_path))
    return execute_rules(scenario, doc).graph, doc


@pytest.fixture
def restrictions(restrictions_path):
    return parse_shapes(read_turtle(restrictions_path))


def test_check_constraint_agrees_with_reference(random_instances, reference):
    for graph, constraints in random_instances():
        triples = {tuple(t) for t in graph}
        for focus in sorted(graph.nodes()):
            for constraint in constraints:
                assert check_constraint(graph, focus, constraint) == reference(triples, focus, constraint), \
                    (focus, constraint)


def test_validate_agrees_with_reference(random_instances, reference):
    for graph, constraints in random_instances():
        doc = ShapesDocument((NodeShape(id=ex("S"), target_class=CLASSES[0], constraints=tuple(constraints)),))
        report = validate(graph, doc)

        triples = {tuple(t) for t in graph}
        describe = Validator(graph).describe
        expected = Counter(
            (focus, describe(c))
            for focus in graph.subjects(RDF_TYPE, CLASSES[0])
            for c in constraints
            if not reference(triples, focus, c)
        )
        assert Counter((r.focus_node, r.constraint) for r in report.results) == expected
        assert report.conforms == (not expected)


def test_scenario_verdicts(inferred):
    graph, doc = inferred
    report = validate(graph, doc)
    assert not report.conforms
    found = {(r.shape_id, r.focus_node) for r in report.violations()}
    assert found == {
        (shriol("CheckLawfulness"), shriol("ProcessingOfLuca")),
        (shriol("CheckTransparency"), shriol("ProcessingOfHans")),
    }
    assert report.infos() == []


def test_results_are_sorted_and_described(inferred):
    graph, doc = inferred
    results = validate(graph, doc).results
    assert results == sorted(results, key=lambda r: r.sort_key())
    lawfulness = results[0]
    assert lawfulness.constraint == "hasValue(shRIOL:is-lawful, true)"
    assert lawfulness.message == "shRIOL:is-lawful must include true (found: none)"
    assert results[1].message == "shRIOL:is-transparent must include true (found: false)"
    assert lawfulness.severity is Severity.VIOLATION


def test_info_results_do_not_break_conformance():
    g = Graph([Triple(ex("n0"), RDF_TYPE, ex("C0"))])
    shape = NodeShape(id=ex("Permission"), target_class=ex("C0"),
                      constraints=(HasValue(make_path([ex("p0")]), ex("n1")),), severity=Severity.INFO)
    report = validate(g, ShapesDocument((shape,)))
    assert report.conforms
    assert [r.focus_node for r in report.infos()] == [ex("n0")]


def test_offending_value_is_reported():
    g = Graph(prefixes={"ex": EX}, triples=[
        Triple(ex("n0"), RDF_TYPE, ex("C0")),
        Triple(ex("n0"), ex("v0"), integer(7)),
        Triple(ex("n0"), ex("v1"), integer(5)),
    ])
    shape = NodeShape(id=ex("S"), target_class=ex("C0"), constraints=(LessThan(make_path([ex("v0")]), ex("v1")),))
    (result,) = validate(g, ShapesDocument((shape,))).results
    assert result.value == integer(7)
    assert result.message == "ex:v0 values must be less than ex:v1 values 5 (found: 7)"


def test_type_errors_propagate():
    g = Graph([
        Triple(ex("n0"), RDF_TYPE, ex("C0")),
        Triple(ex("n0"), ex("v0"), string("seven")),
        Triple(ex("n0"), ex("v1"), integer(5)),
    ])
    shape = NodeShape(id=ex("S"), target_class=ex("C0"), constraints=(LessThan(make_path([ex("v0")]), ex("v1")),))
    with pytest.raises(ConstraintTypeError):
        validate(g, ShapesDocument((shape,)))


def test_targets_match_explicit_types_only(inferred):
    graph, _ = inferred
    assert (shriol("ProcessingOfLuca"), RDF_TYPE, shriol("exceptionAgeDS")) in graph
    shape = NodeShape(id=ex("S"), target_class=shriol("Exception"),
                      constraints=(MinCount(make_path([shriol("is-lawful")]), 1),))
    report = validate(graph, ShapesDocument((shape,)))
    assert report.results == []


def test_fixture_meets_controller_restriction(scenario, restrictions):
    assert validate_cardinality_restrictions(scenario, restrictions).conforms


@pytest.mark.parametrize("controllers, component", [(0, "minCount"), (2, "maxCount")])
def test_controller_count_mutations(scenario, restrictions, controllers, component):
    data = scenario.copy()
    pedro = shriol("ProcessingOfPedro")
    for triple in data.match(s=pedro, p=shriol("has-data-controller")):
        data.remove(triple)
    for i in range(controllers):
        controller = shriol(f"ExtraController{i}")
        data.add(Triple(controller, RDF_TYPE, shriol("DataController")))
        data.add(Triple(pedro, shriol("has-data-controller"), controller))

    (violation,) = validate_cardinality_restrictions(data, restrictions).violations()
    assert violation.focus_node == pedro
    assert violation.shape_id == shriol("CheckDataController")
    assert violation.constraint.startswith(component)


def test_result_statistics(inferred):
    graph, doc = inferred
    stats = ResultStatistics(validate(graph, doc).results, graph.compact)
    frame = stats.results_frame()
    assert list(frame.columns) == ["severity", "shape", "focus", "message"]
    assert len(frame) == 2
    summary = stats.shape_summary()
    assert summary.set_index("shape")["Violation"].to_dict() == {
        "shRIOL:CheckLawfulness": 1, "shRIOL:CheckTransparency": 1,
    }
    assert stats.focus_counts().to_dict() == {"shRIOL:ProcessingOfHans": 1, "shRIOL:ProcessingOfLuca": 1}


def test_empty_statistics():
    stats = ResultStatistics([])
    assert stats.results_frame().empty
    assert list(stats.shape_summary().columns) == ["shape", "Violation", "Info"]


def test_shapes_are_validated_independently(random_instances):
    def found(report):
        return Counter((r.shape_id, r.focus_node, r.constraint, r.message) for r in report.results)

    for graph, constraints in random_instances():
        first = ShapesDocument((NodeShape(id=ex("S0"), target_class=CLASSES[0], constraints=tuple(constraints)),))
        second = ShapesDocument((NodeShape(id=ex("S1"), target_class=CLASSES[1],
                                           constraints=tuple(reversed(constraints)), severity=Severity.INFO),))
        together = validate(graph, first.union(second))
        assert found(together) == found(validate(graph, first)) + found(validate(graph, second))
        assert together.results == sorted(together.results, key=lambda r: r.sort_key())


def test_max_count_zero_is_the_negation_of_min_count_one(rng):
    for _ in range(RANDOM_INSTANCES):
        graph = random_graph(rng)
        path = random_path(rng, LINKS + VALUES)
        for focus in NODES:
            assert check_constraint(graph, focus, MaxCount(path, 0)) != check_constraint(graph, focus, MinCount(path, 1))
