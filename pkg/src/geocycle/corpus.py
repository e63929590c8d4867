"""Seeded random geometric graphs for cross-validation."""

from __future__ import annotations

import random
from itertools import combinations

from .geometry import Point, validate_general_position
from .graphs import GeometricGraph


def random_points(rng: random.Random, n: int, box: int, *, max_tries: int = 1000) -> list[Point]:
    """``n`` integer points in ``[0, box]^2`` with no three collinear."""
    for _ in range(max_tries):
        pts = [Point(rng.randint(0, box), rng.randint(0, box)) for _ in range(n)]
        if len(set(pts)) == n and not validate_general_position(pts, []).collinear:
            return pts
    raise RuntimeError(f"no general-position placement of {n} points found in a box of {box}")


def random_geometric_graph(
    rng: random.Random,
    n_vertices: tuple[int, int] = (4, 7),
    n_edges: tuple[int, int] = (4, 9),
    box: int = 1000,
) -> GeometricGraph:
    """A drawing in general position with no isolated vertices.

    Edges are drawn uniformly among vertex pairs and the sample is rejected
    until every vertex has an edge and no three edges meet at a point.
    """
    while True:
        n = rng.randint(*n_vertices)
        max_m = min(n_edges[1], n * (n - 1) // 2)
        if max_m < max(n_edges[0], (n + 1) // 2):
            continue
        m = rng.randint(max(n_edges[0], (n + 1) // 2), max_m)
        pts = random_points(rng, n, box)
        edges = rng.sample(list(combinations(range(n), 2)), m)
        if len({v for e in edges for v in e}) < n:
            continue
        if not validate_general_position(pts, edges).ok:
            continue
        return GeometricGraph(
            {str(i): p for i, p in enumerate(pts)},
            [(str(u), str(v)) for u, v in edges],
        )


def corpus(size: int = 200, seed: int = 0, **kwargs) -> list[GeometricGraph]:
    rng = random.Random(seed)
    return [random_geometric_graph(rng, **kwargs) for _ in range(size)]
