"""Canonical geometric cycles and the deciders for C3, C4 and C5 targets.

Colors and vertex labels of the convex pentagram are residues mod 5. Its
labeling is arranged so that edge ``i`` joins vertices ``2i+2`` and ``2i+3``,
vertex ``k`` meets edges ``3k-1`` and ``3k+1``, and a vertex label is the sum
of the labels of its two edges. Consecutive vertex labels are adjacent, and
edge ``{j, j+1}`` crosses ``{j+2, j+3}``.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Any, Mapping

from .geometry import Point
from .graphs import (
    AbstractGraph,
    GeometricGraph,
    GraphError,
    crossing_component_graph,
    crossing_subgraph,
    connected_components,
    edge_crossing_graph,
    is_bipartite,
    sort_key,
)
from .hom import (
    Budget,
    HomKind,
    chromatic_number,
    find_homomorphism,
    verify_map,
)

DEFAULT_BUDGET = 10**7


def default_budget() -> int:
    """Search node budget, overridable through ``GEOCYCLE_BUDGET``."""
    raw = os.environ.get("GEOCYCLE_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


class TargetName(str, enum.Enum):
    C3_PLANE = "C3_plane"
    C4_PLANE = "C4_plane"
    C4_CROSSED = "C4_crossed"
    C5_CONVEX = "C5_convex"
    K5_CONVEX = "K5_convex"


@dataclass(frozen=True)
class CanonicalTarget:
    name: TargetName
    graph: GeometricGraph
    edge_colors: dict[str, int] = field(default_factory=dict)
    vertex_labels: dict[str, int] = field(default_factory=dict)


def _parabola(i: int) -> Point:
    return Point(i, i * i)


@lru_cache(maxsize=None)
def canonical_target(name: TargetName | str) -> CanonicalTarget:
    """Fixed drawings on the parabola y = x^2 (so every point set is convex)."""
    name = TargetName(name)
    if name is TargetName.C3_PLANE:
        g = GeometricGraph({str(i): _parabola(i) for i in range(3)}, [("0", "1"), ("1", "2"), ("2", "0")])
        return CanonicalTarget(name, g)
    if name is TargetName.C4_PLANE:
        g = GeometricGraph(
            {str(i): _parabola(i) for i in range(4)},
            [("0", "1"), ("1", "2"), ("2", "3"), ("3", "0")],
        )
        return CanonicalTarget(name, g)
    if name is TargetName.C4_CROSSED:
        # cycle 0-1-2-3 visits hull positions 0, 2, 1, 3: only 01 and 23 cross
        place = {"0": 0, "1": 2, "2": 1, "3": 3}
        g = GeometricGraph(
            {v: _parabola(i) for v, i in place.items()},
            [("0", "1"), ("1", "2"), ("2", "3"), ("3", "0")],
        )
        return CanonicalTarget(name, g)
    if name is TargetName.C5_CONVEX:
        # label k sits at hull position 2k, so label-consecutive edges form the pentagram
        coords = {str(k): _parabola(2 * k % 5) for k in range(5)}
        edges = {f"e{i}": (str((2 * i + 2) % 5), str((2 * i + 3) % 5)) for i in range(5)}
        g = GeometricGraph(coords, edges)
        return CanonicalTarget(
            name,
            g,
            edge_colors={f"e{i}": i for i in range(5)},
            vertex_labels={str(k): k for k in range(5)},
        )
    g = GeometricGraph(
        {str(i): _parabola(i) for i in range(5)},
        [(str(a), str(b)) for a, b in combinations(range(5), 2)],
    )
    return CanonicalTarget(TargetName.K5_CONVEX, g)


def c5_edge(i: int) -> frozenset:
    """Vertex labels of the pentagram edge colored ``i``."""
    return frozenset({(2 * i + 2) % 5, (2 * i + 3) % 5})


class ColoringKind(str, enum.Enum):
    CLIQUE = "clique"
    CYCLE = "cycle"


class InvalidColoringError(ValueError):
    pass


@dataclass(frozen=True)
class ThicknessColoring:
    colors: dict[str, int]
    modulus: int
    kind: ColoringKind = ColoringKind.CLIQUE

    def violations(self, g: GeometricGraph) -> list[str]:
        out = []
        missing = sorted(set(g.edges) - set(self.colors), key=sort_key)
        if missing:
            out.append(f"uncolored edges {missing}")
            return out
        for e, c in self.colors.items():
            if not 0 <= c < self.modulus:
                out.append(f"edge {e} has color {c} outside 0..{self.modulus - 1}")
        for e, f in sorted(tuple(sorted(p, key=sort_key)) for p in g.crossings):
            a, b = self.colors[e], self.colors[f]
            if self.kind is ColoringKind.CLIQUE and a == b:
                out.append(f"crossing edges {e}, {f} share color {a}")
            if self.kind is ColoringKind.CYCLE and (a - b) % self.modulus not in (1, self.modulus - 1):
                out.append(f"crossing edges {e}, {f} have non-consecutive colors {a}, {b}")
        return out


def thickness(g: GeometricGraph) -> int:
    """Least number of colors in an edge coloring with no monochromatic crossing."""
    return chromatic_number(edge_crossing_graph(g), cap=8)


@dataclass(frozen=True)
class MonochromaticSubgraph:
    color: int
    graph: GeometricGraph
    vertices: frozenset


def monochromatic_subgraphs(g: GeometricGraph, eps: ThicknessColoring) -> list[MonochromaticSubgraph]:
    problems = eps.violations(g)
    if problems:
        raise InvalidColoringError("; ".join(problems))
    out = []
    for c in sorted(set(eps.colors.values())):
        sub = g.subgraph(e for e in g.edge_ids() if eps.colors[e] == c)
        out.append(MonochromaticSubgraph(c, sub, frozenset(sub.vertices)))
    return out


@dataclass
class Decision:
    target: str
    answer: bool
    certificate: dict | None = None
    evidence: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.answer and self.certificate is None:
            raise ValueError("a positive decision needs a certificate")


class CertificateError(RuntimeError):
    """A theorem-based construction produced a map that does not verify."""


def _checked(g: GeometricGraph, name: TargetName, f: dict) -> dict:
    ok = verify_map(g, canonical_target(name).graph, f, HomKind.GEOMETRIC)
    if not ok:
        raise CertificateError(f"certificate to {name.value} fails: {ok.witness}")
    return f


def decide_c3(g: GeometricGraph, *, budget: int | None = None) -> Decision:
    """Plane and 3-colorable, mapped onto the plane triangle."""
    g.require_no_isolated()
    target = TargetName.C3_PLANE
    if g.crossings:
        pair = sorted(sorted(p, key=sort_key) for p in g.crossings)[0]
        return Decision(target.value, False, evidence={"failed": "not plane", "crossing": pair})
    counter = Budget(budget if budget is not None else default_budget())
    coloring = find_homomorphism(g.underlying, AbstractGraph.complete(3), budget=counter)
    if coloring is None:
        return Decision(target.value, False, evidence={"failed": "not 3-colorable"})
    cert = _checked(g, target, {v: str(c) for v, c in coloring.items()})
    return Decision(target.value, True, cert, {"coloring": coloring})


def _c4_certificate(g: GeometricGraph, sides: Mapping[str, int], edge_class: Mapping[str, int]) -> dict:
    # class 0 crossing edges land on 01, class 1 on 23; the rest follow the bipartition
    cert = {v: ("0", "1")[s] for v, s in sides.items()}
    for e, cls in edge_class.items():
        for v in g.edges[e]:
            cert[v] = (("0", "1"), ("2", "3"))[cls][sides[v]]
    return cert


def decide_c4_thm1(g: GeometricGraph, *, budget: int | None = None) -> Decision:
    """Bipartite, crossing components individually plane, component graph bipartite.

    Polynomial; ``budget`` is accepted for a uniform decider signature.
    """
    g.require_no_isolated()
    target = TargetName.C4_CROSSED
    sides = is_bipartite(g.underlying)
    if sides is None:
        return Decision(target.value, False, evidence={"failed": "graph is not bipartite"})
    cg = crossing_component_graph(g)
    bad = [c.name for c in cg.components if c.self_crossing]
    if bad:
        return Decision(
            target.value, False, evidence={"failed": "crossing component is not plane", "components": bad}
        )
    comp_sides = is_bipartite(cg.graph)
    if comp_sides is None:
        return Decision(target.value, False, evidence={"failed": "crossing component graph is not bipartite"})
    owner = cg.component_of_edge()
    edge_class = {e: comp_sides[c] for e, c in owner.items()}
    cert = _checked(g, target, _c4_certificate(g, sides, edge_class))
    return Decision(
        target.value,
        True,
        cert,
        {"bipartition": sides, "component_sides": comp_sides, "components": _components_json(cg)},
    )


def _components_json(cg) -> list[dict]:
    return [
        {"name": c.name, "vertices": list(c.vertices), "edges": list(c.edges), "self_crossing": c.self_crossing}
        for c in cg.components
    ]


def decide_c4_thm2(g: GeometricGraph, *, budget: int | None = None) -> Decision:
    """Bipartite, with a 2-coloring of the crossing edges whose color classes share no vertex.

    Searched edge by edge: crossing edges must differ, edges meeting at a vertex
    must agree.
    """
    g.require_no_isolated()
    target = TargetName.C4_CROSSED
    sides = is_bipartite(g.underlying)
    if sides is None:
        return Decision(target.value, False, evidence={"failed": "graph is not bipartite"})
    counter = Budget(budget if budget is not None else default_budget())
    edges = [e for e in g.edge_ids() if any(e in p for p in g.crossings)]
    crosses = {e: set() for e in edges}
    touches = {e: set() for e in edges}
    for p in g.crossings:
        a, b = tuple(p)
        crosses[a].add(b)
        crosses[b].add(a)
    for a, b in combinations(edges, 2):
        if set(g.edges[a]) & set(g.edges[b]):
            touches[a].add(b)
            touches[b].add(a)
    color: dict[str, int] = {}

    def solve(i: int) -> bool:
        if i == len(edges):
            return True
        e = edges[i]
        for c in (0, 1):
            counter.tick()
            if any(color.get(x) == c for x in crosses[e]):
                continue
            if any(color.get(x) == 1 - c for x in touches[e]):
                continue
            color[e] = c
            if solve(i + 1):
                return True
            del color[e]
        return False

    if not solve(0):
        return Decision(
            target.value,
            False,
            evidence={"failed": "no 2-coloring of the crossing edges with disjoint color classes"},
        )
    cert = _checked(g, target, _c4_certificate(g, sides, color))
    coloring = {e: color[e] for e in edges}
    return Decision(target.value, True, cert, {"bipartition": sides, "edge_coloring": coloring})


def _c5_partitions(g: GeometricGraph, colors: Mapping[str, int]) -> dict[int, dict[str, int]] | str:
    """Bipartition of every monochromatic subgraph, or the reason none fits.

    Side 0 receives label ``2i+2`` and side 1 label ``2i+3``. Vertices shared
    with the ``i+2`` subgraph are forced to side 0, those shared with ``i+3``
    to side 1.
    """
    vcolors: dict[str, set] = {v: set() for v in g.vertices}
    for e, c in colors.items():
        for v in g.edges[e]:
            vcolors[v].add(c)
    parts: dict[int, dict[str, int]] = {}
    for i in sorted(set(colors.values())):
        sub = AbstractGraph(
            (v for e, c in colors.items() if c == i for v in g.edges[e]),
            (g.edges[e] for e, c in colors.items() if c == i),
        )
        sides = is_bipartite(sub)
        if sides is None:
            return f"{i}-subgraph is not bipartite"
        for comp in connected_components(sub):
            forced = set()
            for v in comp:
                for other in vcolors[v] - {i}:
                    want = {(i + 2) % 5: 0, (i + 3) % 5: 1}.get(other)
                    if want is None:
                        return f"vertex {v} lies in subgraphs {i} and {other}"
                    forced.add(sides[v] ^ want)
            if len(forced) > 1:
                return f"shared vertices of the {i}-subgraph cannot be split as required"
            flip = forced.pop() if forced else 0
            for v in comp:
                parts.setdefault(i, {})[v] = sides[v] ^ flip
    return parts


def construct_c5_certificate(
    g: GeometricGraph,
    eps: ThicknessColoring | Mapping[str, int],
    partitions: Mapping[int, Mapping[str, int]] | None = None,
) -> dict:
    """Map vertices to pentagram labels (as vertex ids of ``C5_convex``).

    Vertices in two monochromatic subgraphs take the sum of the two colors; the
    rest take ``2i+2`` or ``2i+3`` by side of their ``i``-subgraph partition.
    """
    colors = eps.colors if isinstance(eps, ThicknessColoring) else dict(eps)
    if partitions is None:
        partitions = _c5_partitions(g, colors)
        if isinstance(partitions, str):
            raise CertificateError(partitions)
    vcolors: dict[str, set] = {v: set() for v in g.vertices}
    for e, c in colors.items():
        for v in g.edges[e]:
            vcolors[v].add(c)
    labels: dict[str, int] = {}
    for v in g.vertices:
        cs = sorted(vcolors[v])
        if len(cs) > 2:
            raise CertificateError(f"vertex {v} lies in {len(cs)} monochromatic subgraphs")
        if len(cs) == 2:
            labels[v] = sum(cs) % 5
        elif len(cs) == 1:
            (i,) = cs
            labels[v] = (2 * i + 2 + partitions[i][v]) % 5
        else:
            raise CertificateError(f"vertex {v} has no edges")
        for i in cs:
            if labels[v] != (2 * i + 2 + partitions[i][v]) % 5:
                raise CertificateError(f"vertex {v} sits on the wrong side of its {i}-subgraph")
    return {v: str(k) for v, k in labels.items()}


def _has_three_mutual_crossings(g: GeometricGraph) -> bool:
    ex = edge_crossing_graph(g)
    return any(
        ex.has_edge(a, b) and ex.has_edge(b, c) and ex.has_edge(a, c)
        for a, b, c in combinations(ex.vertices, 3)
    )


def _c5_edge_order(g: GeometricGraph) -> list[str]:
    # crossing edges first in EX-BFS order, then the rest grouped around shared vertices
    ex = edge_crossing_graph(g)
    order = [e for comp in connected_components(ex) for e in comp if ex.adj[e]]
    placed = set(order)
    rest = [e for e in g.edge_ids() if e not in placed]
    while rest:
        touched = {v for e in order for v in g.edges[e]}
        nxt = next((e for e in rest if set(g.edges[e]) & touched), rest[0])
        rest.remove(nxt)
        order.append(nxt)
    return order


def decide_c5(g: GeometricGraph, *, budget: int | None = None) -> Decision:
    """Search for a cycle-kind edge 5-coloring meeting the three pentagram conditions.

    Every vertex sees at most two colors and never two consecutive ones; the
    partition condition is checked once all edges are colored. All edges are
    colored, with crossing edges constrained to consecutive colors.
    """
    g.require_no_isolated()
    target = TargetName.C5_CONVEX
    counter = Budget(budget if budget is not None else default_budget())
    order = _c5_edge_order(g)
    crosses: dict[str, set] = {e: set() for e in g.edges}
    for p in g.crossings:
        a, b = tuple(p)
        crosses[a].add(b)
        crosses[b].add(a)
    colors: dict[str, int] = {}
    at: dict[str, list[int]] = {v: [] for v in g.vertices}
    stats = {"colorings_checked": 0}

    def vertex_ok(v: str, c: int) -> bool:
        cs = set(at[v]) | {c}
        if len(cs) > 2:
            return False
        if len(cs) == 2:
            a, b = cs
            return (a - b) % 5 in (2, 3)
        return True

    def solve(i: int):
        if i == len(order):
            stats["colorings_checked"] += 1
            parts = _c5_partitions(g, colors)
            return None if isinstance(parts, str) else parts
        e = order[i]
        u, v = g.edges[e]
        # global color rotation is a symmetry of the pentagram; pin the first edge
        palette = (0,) if i == 0 else range(5)
        for c in palette:
            counter.tick()
            if any(x in colors and (colors[x] - c) % 5 not in (1, 4) for x in crosses[e]):
                continue
            if not (vertex_ok(u, c) and vertex_ok(v, c)):
                continue
            colors[e] = c
            at[u].append(c)
            at[v].append(c)
            found = solve(i + 1)
            if found is not None:
                return found
            at[u].pop()
            at[v].pop()
            del colors[e]
        return None

    parts = solve(0)
    if parts is None:
        return Decision(
            target.value,
            False,
            evidence={
                "failed": "no thickness edge C5-coloring satisfies the three conditions",
                "search_nodes": counter.used,
                **stats,
            },
        )
    eps = ThicknessColoring(dict(colors), 5, ColoringKind.CYCLE)
    if eps.violations(g):
        raise CertificateError("; ".join(eps.violations(g)))
    if _has_three_mutual_crossings(g):
        raise CertificateError("accepted C5-coloring on a graph with three mutually crossing edges")
    cert = _checked(g, target, construct_c5_certificate(g, eps, parts))
    return Decision(
        target.value,
        True,
        cert,
        {
            "edge_coloring": {e: colors[e] for e in g.edge_ids()},
            "partitions": parts,
            "search_nodes": counter.used,
        },
    )


def crossing_image_law_holds(g: GeometricGraph, cert: Mapping[str, str]) -> bool:
    """Each crossing pair lands on pentagram labels ``{j, j+1}`` and ``{j+2, j+3}``."""
    for p in g.vertex_crossings:
        e1, e2 = (sorted(int(cert[v]) for v in e) for e in p)
        ok = False
        for j in range(5):
            a = sorted((j, (j + 1) % 5))
            b = sorted(((j + 2) % 5, (j + 3) % 5))
            if (e1, e2) in ((a, b), (b, a)):
                ok = True
        if not ok:
            return False
    return True


def decide_k5(g: GeometricGraph, *, budget: int | None = None) -> Decision:
    """Geometric homomorphism search onto the convex K5."""
    target = TargetName.K5_CONVEX
    counter = Budget(budget if budget is not None else default_budget())
    f = find_homomorphism(g, canonical_target(target).graph, HomKind.GEOMETRIC, budget=counter)
    if f is None:
        return Decision(target.value, False, evidence={"failed": "no geometric homomorphism", "search_nodes": counter.used})
    return Decision(target.value, True, _checked(g, target, f), {"search_nodes": counter.used})


@dataclass(frozen=True)
class NecessaryConditionReport:
    status: str
    decision: Decision | None

    @property
    def eliminated(self) -> bool:
        return self.status == "not 5-geocolorable"


def check_k5_necessary(g: GeometricGraph, *, budget: int | None = None) -> NecessaryConditionReport:
    """Rule out 5-geocolorability when the crossing subgraph is not C5-geocolorable."""
    sub = crossing_subgraph(g)
    if not sub.edges:
        return NecessaryConditionReport("inconclusive", None)
    d = decide_c5(sub, budget=budget)
    return NecessaryConditionReport("inconclusive" if d.answer else "not 5-geocolorable", d)


DECIDERS = {
    "c3": decide_c3,
    "c4": decide_c4_thm1,
    "c5": decide_c5,
    "k5": decide_k5,
}

ORACLE_TARGETS = {
    "c3": TargetName.C3_PLANE,
    "c4": TargetName.C4_CROSSED,
    "c5": TargetName.C5_CONVEX,
    "k5": TargetName.K5_CONVEX,
}


def oracle(g: GeometricGraph, target: str, *, budget: int | None = None) -> dict | None:
    """Brute-force geometric homomorphism onto the canonical target for ``target``."""
    counter = Budget(budget if budget is not None else default_budget())
    return find_homomorphism(g, canonical_target(ORACLE_TARGETS[target]).graph, HomKind.GEOMETRIC, budget=counter)


__all__ = [
    "CanonicalTarget",
    "CertificateError",
    "ColoringKind",
    "DECIDERS",
    "Decision",
    "GraphError",
    "InvalidColoringError",
    "MonochromaticSubgraph",
    "NecessaryConditionReport",
    "TargetName",
    "ThicknessColoring",
    "c5_edge",
    "canonical_target",
    "check_k5_necessary",
    "construct_c5_certificate",
    "crossing_image_law_holds",
    "decide_c3",
    "decide_c4_thm1",
    "decide_c4_thm2",
    "decide_c5",
    "decide_k5",
    "monochromatic_subgraphs",
    "oracle",
    "thickness",
]
