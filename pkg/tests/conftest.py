import random
from itertools import combinations

import pytest
from hypothesis import assume, strategies as st

from geocycle.corpus import corpus
from geocycle.geometry import Point, validate_general_position
from geocycle.graphs import GeometricGraph

coords = st.integers(min_value=-50, max_value=50)
points = st.builds(Point, coords, coords)


@st.composite
def geometric_graphs(draw, min_vertices=4, max_vertices=7, max_edges=9):
    """Drawings in general position with no isolated vertices."""
    n = draw(st.integers(min_vertices, max_vertices))
    pts = draw(st.lists(points, min_size=n, max_size=n, unique=True))
    pairs = list(combinations(range(n), 2))
    edges = draw(
        st.lists(st.sampled_from(pairs), min_size=(n + 1) // 2, max_size=max_edges, unique=True)
    )
    assume(len({v for e in edges for v in e}) == n)
    assume(validate_general_position(pts, edges).ok)
    return GeometricGraph({str(i): p for i, p in enumerate(pts)}, [(str(u), str(v)) for u, v in edges])


@pytest.fixture(scope="session")
def small_corpus():
    return corpus(60, seed=11)


@pytest.fixture
def rng():
    return random.Random(1234)
