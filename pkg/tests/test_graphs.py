from itertools import combinations

import pytest
from hypothesis import given, settings

from geocycle.fixtures import chained_crossings, crossed_c4, pentagram, plane_c4, plane_c5
from geocycle.graphs import (
    AbstractGraph,
    GeneralPositionError,
    GeometricGraph,
    GraphError,
    co_crossing_pairs,
    crossing_component_graph,
    crossing_set,
    crossing_subgraph,
    edge_crossing_graph,
    is_bipartite,
)
from geocycle.hom import find_homomorphism
from geocycle.geometry import Point

from conftest import geometric_graphs


def isomorphic(a: AbstractGraph, b: AbstractGraph) -> bool:
    if (len(a.vertices), len(a.edges)) != (len(b.vertices), len(b.edges)):
        return False
    return find_homomorphism(a, b, injective=True) is not None


def test_abstract_graph_rejects_loops_and_unknown_vertices():
    with pytest.raises(GraphError):
        AbstractGraph([1], [(1, 1)])
    with pytest.raises(GraphError):
        AbstractGraph([1], [(1, 2)])


def test_general_position_enforced_on_load():
    with pytest.raises(GeneralPositionError):
        GeometricGraph({"a": Point(0, 0), "b": Point(1, 1), "c": Point(2, 2)}, [("a", "b")])


def test_isolated_vertex_warns():
    with pytest.warns(UserWarning, match="isolated"):
        GeometricGraph({"a": Point(0, 0), "b": Point(1, 0), "c": Point(0, 1)}, [("a", "b")])


def test_crossing_set_examples():
    assert crossing_set(plane_c4()) == frozenset()
    assert len(crossing_set(crossed_c4())) == 1
    assert len(crossing_set(pentagram())) == 5


def test_edge_crossing_graph_examples():
    assert isomorphic(edge_crossing_graph(pentagram()), AbstractGraph.cycle(5))
    k2_2k1 = AbstractGraph(range(4), [(0, 1)])
    assert isomorphic(edge_crossing_graph(crossed_c4()), k2_2k1)
    assert not edge_crossing_graph(plane_c5()).edges


def test_crossing_subgraph_examples():
    assert crossing_subgraph(pentagram()) == pentagram()
    assert not crossing_subgraph(plane_c4()).vertices
    sub = crossing_subgraph(crossed_c4())
    assert len(sub.vertices) == 4 and sorted(sub.edges) == ["0-1", "2-3"]


def test_crossing_component_graph_examples():
    cg = crossing_component_graph(crossed_c4())
    assert len(cg.components) == 2 and len(cg.graph.edges) == 1
    assert not any(c.self_crossing for c in cg.components)

    assert not crossing_component_graph(plane_c4()).components

    cg = crossing_component_graph(pentagram())
    assert len(cg.components) == 1 and cg.components[0].self_crossing

    cg = crossing_component_graph(chained_crossings())
    assert isomorphic(cg.graph, AbstractGraph.path(3))


def test_is_bipartite_examples():
    sides = is_bipartite(AbstractGraph.cycle(4))
    assert sorted(list(sides.values()).count(s) for s in (0, 1)) == [2, 2]
    assert is_bipartite(AbstractGraph.cycle(5)) is None
    assert is_bipartite(AbstractGraph(range(4), [(0, 1)])) is not None


def test_co_crossing_pairs_examples():
    # the 4 pairs joining an endpoint of 01 to an endpoint of 23
    expected = {frozenset(p) for p in [("0", "2"), ("0", "3"), ("1", "2"), ("1", "3")]}
    assert co_crossing_pairs(crossed_c4()) == expected
    assert co_crossing_pairs(plane_c4()) == frozenset()
    g = pentagram()
    covered = co_crossing_pairs(g) | g.underlying.edges
    assert covered == {frozenset(p) for p in combinations(g.vertices, 2)}


@settings(max_examples=60, deadline=None)
@given(geometric_graphs())
def test_ex_of_crossing_subgraph_drops_isolated(g):
    assert edge_crossing_graph(crossing_subgraph(g)) == edge_crossing_graph(g).without_isolated()


@settings(max_examples=60, deadline=None)
@given(geometric_graphs())
def test_plane_iff_ex_edgeless(g):
    brute = any(
        _cross(g, e, f) for e, f in combinations(g.edge_ids(), 2)
    )
    assert brute == bool(edge_crossing_graph(g).edges)


def _cross(g, e, f):
    from geocycle.geometry import segments_cross

    if set(g.edges[e]) & set(g.edges[f]):
        return False
    return segments_cross(g.segment(e), g.segment(f))


@settings(max_examples=60, deadline=None)
@given(geometric_graphs())
def test_component_flags_match_planarity(g):
    cg = crossing_component_graph(g)
    for c in cg.components:
        assert c.edges
        sub = g.subgraph(c.edges)
        assert c.self_crossing == bool(sub.crossings)


@settings(max_examples=60, deadline=None)
@given(geometric_graphs())
def test_crossing_pairs_never_share_endpoints(g):
    for e, f in g.crossings:
        assert not set(g.edges[e]) & set(g.edges[f])
