from itertools import combinations

import pytest
from hypothesis import given, settings

from geocycle.cycles import (
    ColoringKind,
    InvalidColoringError,
    TargetName,
    ThicknessColoring,
    c5_edge,
    canonical_target,
    check_k5_necessary,
    construct_c5_certificate,
    crossing_image_law_holds,
    decide_c3,
    decide_c4_thm1,
    decide_c4_thm2,
    decide_c5,
    decide_k5,
    monochromatic_subgraphs,
    oracle,
    thickness,
)
from geocycle.fixtures import (
    chained_crossings,
    convex_k5,
    crossed_c4,
    pentagonal_counterexample,
    pentagram,
    plane_c4,
    plane_c5,
)
from geocycle.geometry import Point
from geocycle.graphs import AbstractGraph, GeometricGraph, IsolatedVertexError, edge_crossing_graph
from geocycle.hom import HomKind, SearchBudgetExceeded, find_homomorphism, verify_map

from conftest import geometric_graphs


def test_canonical_targets_are_stable():
    for name in TargetName:
        t = canonical_target(name)
        assert t.graph == canonical_target(name.value).graph
        assert t.graph.position_report().ok


def test_canonical_crossing_counts():
    assert len(canonical_target("C3_plane").graph.crossings) == 0
    assert len(canonical_target("C4_plane").graph.crossings) == 0
    assert len(canonical_target("C4_crossed").graph.crossings) == 1
    assert len(canonical_target("C5_convex").graph.crossings) == 5
    k5 = canonical_target("K5_convex").graph
    assert len(k5.edges) == 10 and len(k5.crossings) == 5


def test_pentagram_labeling_arithmetic():
    t = canonical_target(TargetName.C5_CONVEX)
    g = t.graph
    for e, i in t.edge_colors.items():
        ends = {t.vertex_labels[v] for v in g.edges[e]}
        assert ends == {(2 * i + 2) % 5, (2 * i + 3) % 5} == c5_edge(i)
    for v, k in t.vertex_labels.items():
        incident = {t.edge_colors[e] for e, uv in g.edges.items() if v in uv}
        assert incident == {(3 * k - 1) % 5, (3 * k + 1) % 5}
        assert sum(incident) % 5 == k
    # paper-style check: edge 1 joins 4 and 5 (5 written as 0)
    assert c5_edge(1) == {4, 0}


def test_pentagram_crossing_pairs():
    g = pentagram()
    for j in range(5):
        a = frozenset({str(j), str((j + 1) % 5)})
        b = frozenset({str((j + 2) % 5), str((j + 3) % 5)})
        assert frozenset({a, b}) in g.vertex_crossings


def test_thickness():
    assert thickness(plane_c4()) == 1
    assert thickness(crossed_c4()) == 2
    assert thickness(pentagram()) == 3


def test_monochromatic_subgraphs():
    p = pentagram()
    fig = ThicknessColoring(dict(canonical_target("C5_convex").edge_colors), 5, ColoringKind.CYCLE)
    subs = monochromatic_subgraphs(p, fig)
    assert [s.color for s in subs] == [0, 1, 2, 3, 4]
    assert all(len(s.graph.edges) == 1 for s in subs)

    plane = plane_c4()
    subs = monochromatic_subgraphs(plane, ThicknessColoring({e: 0 for e in plane.edges}, 1))
    assert len(subs) == 1 and subs[0].graph == plane

    c4 = crossed_c4()
    subs = monochromatic_subgraphs(c4, ThicknessColoring({"0-1": 0, "2-3": 1, "1-2": 0, "3-0": 1}, 2))
    assert len(subs) == 2
    assert {"0-1", "2-3"} != set(subs[0].graph.edges)


def test_invalid_colorings_rejected():
    with pytest.raises(InvalidColoringError):
        monochromatic_subgraphs(crossed_c4(), ThicknessColoring({e: 0 for e in crossed_c4().edges}, 1))
    bad = {"e0": 0, "e1": 2, "e2": 2, "e3": 3, "e4": 4}
    with pytest.raises(InvalidColoringError):
        monochromatic_subgraphs(pentagram(), ThicknessColoring(bad, 5, ColoringKind.CYCLE))


def test_decide_c3_examples():
    d = decide_c3(canonical_target("C3_plane").graph)
    assert d.answer
    assert not decide_c3(crossed_c4()).answer
    d = decide_c3(plane_c5())
    assert d.answer
    assert oracle(plane_c5(), "c3") is not None


def test_deciders_reject_isolated_vertices():
    g = GeometricGraph(
        {"a": Point(0, 0), "b": Point(1, 0), "c": Point(0, 1)}, [("a", "b")], warn_isolated=False
    )
    for decide in (decide_c3, decide_c4_thm1, decide_c4_thm2, decide_c5):
        with pytest.raises(IsolatedVertexError):
            decide(g)


def test_decide_c4_examples():
    for decide in (decide_c4_thm1, decide_c4_thm2):
        assert decide(plane_c4()).answer
        assert decide(crossed_c4()).answer
        assert not decide(pentagram()).answer
        d = decide(chained_crossings())
        assert d.answer
        assert verify_map(chained_crossings(), crossed_c4(), d.certificate, HomKind.GEOMETRIC)
    assert oracle(chained_crossings(), "c4") is not None


def test_decide_c4_thm1_reports_failed_condition():
    assert decide_c4_thm1(pentagram()).evidence["failed"] == "graph is not bipartite"


def test_decide_c5_examples():
    d = decide_c5(pentagram())
    assert d.answer
    # the identity-compatible labelling: every vertex goes to its own label
    assert d.certificate == {v: v for v in pentagram().vertices}
    assert not decide_c5(crossed_c4()).answer
    d = decide_c5(plane_c5())
    assert d.answer and crossing_image_law_holds(plane_c5(), d.certificate)


def test_construct_certificate_from_figure_coloring():
    colors = dict(canonical_target("C5_convex").edge_colors)
    cert = construct_c5_certificate(pentagram(), colors)
    assert cert == {str(k): str(k) for k in range(5)}


def test_construct_certificate_single_crossing():
    c4 = crossed_c4()
    g = c4.subgraph(["0-1", "2-3"])
    cert = construct_c5_certificate(g, {"0-1": 1, "2-3": 2})
    # color 1 edge onto {4, 0}, color 2 edge onto {1, 2}
    assert {cert["0"], cert["1"]} == {"4", "0"}
    assert {cert["2"], cert["3"]} == {"1", "2"}
    assert verify_map(g, pentagram(), cert, HomKind.GEOMETRIC)


def test_construct_certificate_plane_single_color():
    g = plane_c4()
    cert = construct_c5_certificate(g, {e: 0 for e in g.edges})
    assert set(cert.values()) == {"2", "3"}
    assert all(cert[u] != cert[v] for u, v in g.edges.values())


def test_decide_k5_examples():
    assert decide_k5(convex_k5()).answer
    assert decide_k5(pentagram()).answer
    assert not decide_k5(pentagonal_counterexample()).answer


def test_check_k5_necessary_examples():
    assert check_k5_necessary(plane_c5()).status == "inconclusive"
    assert check_k5_necessary(pentagram()).status == "inconclusive"
    assert check_k5_necessary(pentagonal_counterexample()).eliminated


def test_counterexample_properties():
    g = pentagonal_counterexample()
    c5 = AbstractGraph.cycle(5)
    assert len(g.vertices) == 7
    assert find_homomorphism(g.underlying, c5) is not None
    assert find_homomorphism(edge_crossing_graph(g), c5) is not None
    assert not decide_c5(g).answer
    assert oracle(g, "c5") is None


def test_budget_applies_to_c5():
    with pytest.raises(SearchBudgetExceeded):
        decide_c5(pentagonal_counterexample(), budget=5)


def test_budget_env_var(monkeypatch):
    monkeypatch.setenv("GEOCYCLE_BUDGET", "5")
    with pytest.raises(SearchBudgetExceeded):
        decide_c5(pentagonal_counterexample())


def _oracle_check(g):
    for key, decide in (("c3", decide_c3), ("c4", decide_c4_thm1), ("c5", decide_c5)):
        d = decide(g)
        assert d.answer == (oracle(g, key) is not None), key
        if d.answer:
            target = canonical_target({"c3": "C3_plane", "c4": "C4_crossed", "c5": "C5_convex"}[key]).graph
            assert verify_map(g, target, d.certificate, HomKind.GEOMETRIC)
    assert decide_c4_thm1(g).answer == decide_c4_thm2(g).answer


def test_oracle_equivalence_on_small_corpus(small_corpus):
    for g in small_corpus:
        _oracle_check(g)


@settings(max_examples=60, deadline=None)
@given(geometric_graphs())
def test_oracle_equivalence_property(g):
    _oracle_check(g)


@settings(max_examples=60, deadline=None)
@given(geometric_graphs())
def test_c5_certificates_follow_image_law(g):
    d = decide_c5(g)
    if d.answer:
        assert crossing_image_law_holds(g, d.certificate)
        ex = edge_crossing_graph(g)
        assert not any(
            ex.has_edge(a, b) and ex.has_edge(b, c) and ex.has_edge(a, c) for a, b, c in combinations(ex.vertices, 3)
        )


@settings(max_examples=40, deadline=None)
@given(geometric_graphs())
def test_k5_necessary_never_eliminates_colorable(g):
    if check_k5_necessary(g).eliminated:
        assert not decide_k5(g).answer
