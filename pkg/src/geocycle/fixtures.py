"""Named drawings used by the tests, the CLI examples and the acceptance suite."""

from __future__ import annotations

from .cycles import TargetName, canonical_target
from .geometry import Point
from .graphs import GeometricGraph


def _on_parabola(n: int) -> dict[str, Point]:
    return {str(i): Point(i, i * i) for i in range(n)}


def pentagram() -> GeometricGraph:
    return canonical_target(TargetName.C5_CONVEX).graph


def plane_c4() -> GeometricGraph:
    return canonical_target(TargetName.C4_PLANE).graph


def crossed_c4() -> GeometricGraph:
    return canonical_target(TargetName.C4_CROSSED).graph


def convex_k5() -> GeometricGraph:
    return canonical_target(TargetName.K5_CONVEX).graph


def plane_c5() -> GeometricGraph:
    """C5 following the hull order of a convex pentagon (no crossings)."""
    return GeometricGraph(_on_parabola(5), [("0", "1"), ("1", "2"), ("2", "3"), ("3", "4"), ("4", "0")])


def plane_path(n: int = 4) -> GeometricGraph:
    return GeometricGraph(_on_parabola(n), [(str(i), str(i + 1)) for i in range(n - 1)])


def chained_crossings() -> GeometricGraph:
    """Eight vertices whose three crossing components form a path in the component graph."""
    coords = {
        "0": Point(12, 4), "1": Point(19, 7), "2": Point(28, 15), "3": Point(6, 3),
        "4": Point(23, 22), "5": Point(15, 17), "6": Point(4, 12), "7": Point(20, 12),
    }
    return GeometricGraph(coords, [("0", "5"), ("1", "4"), ("2", "6"), ("3", "7"), ("6", "7")])


def pentagonal_counterexample() -> GeometricGraph:
    """Seven vertices where G -> C5 and EX -> C5 hold but no map to the pentagram exists.

    Every vertex pair is adjacent or co-crossing, so nothing can be identified
    and the geochromatic number equals the order. Vertices sit on a convex
    7-gon; vertices 0 and 3 have degree 3 and every edge is crossed.
    """
    edges = [("0", "2"), ("0", "3"), ("0", "4"), ("1", "3"), ("1", "6"), ("2", "5"), ("3", "5"), ("4", "6")]
    return GeometricGraph(_on_parabola(7), edges)


NAMED = {
    "pentagram": pentagram,
    "plane_c4": plane_c4,
    "crossed_c4": crossed_c4,
    "convex_k5": convex_k5,
    "plane_c5": plane_c5,
    "chained_crossings": chained_crossings,
    "pentagonal_counterexample": pentagonal_counterexample,
}
