"""Graph data model and the crossing structures derived from a drawing.

Vertex and edge ids are strings. Derived graphs keep the ids of the elements
they were built from, so an edge-crossing graph has the original edge ids as
its vertices and a crossing component graph uses ``"C0", "C1", ...`` with
the member vertices and edges recorded alongside.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable, Mapping

from .geometry import (
    DegeneracyError,
    GeometryError,
    Point,
    PositionReport,
    Segment,
    segments_cross,
    validate_general_position,
)

Pair = frozenset


class GraphError(ValueError):
    pass


class GeneralPositionError(GeometryError):
    def __init__(self, report: PositionReport) -> None:
        self.report = report
        super().__init__(f"drawing is not in general position: {report.describe()}")


class IsolatedVertexError(GraphError):
    """Raised by the deciders, which assume every vertex has an edge."""


def sort_key(v) -> tuple:
    # numeric-looking ids sort numerically, then everything else by text
    s = str(v)
    return (0, int(s), "") if s.lstrip("-").isdigit() else (1, 0, s)


class AbstractGraph:
    """A simple undirected graph on hashable vertex ids."""

    def __init__(self, vertices: Iterable[Hashable], edges: Iterable[Iterable[Hashable]] = ()):
        self.vertices: tuple = tuple(sorted(dict.fromkeys(vertices), key=sort_key))
        adj: dict = {v: set() for v in self.vertices}
        edge_set = set()
        for e in edges:
            u, v = tuple(e)
            if u == v:
                raise GraphError(f"loop at {u!r}")
            if u not in adj or v not in adj:
                raise GraphError(f"edge {u!r}-{v!r} references an unknown vertex")
            edge_set.add(Pair((u, v)))
            adj[u].add(v)
            adj[v].add(u)
        self.edges: frozenset = frozenset(edge_set)
        self.adj: dict = {v: frozenset(n) for v, n in adj.items()}

    def __repr__(self) -> str:
        return f"AbstractGraph(|V|={len(self.vertices)}, |E|={len(self.edges)})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AbstractGraph)
            and set(self.vertices) == set(other.vertices)
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((frozenset(self.vertices), self.edges))

    def __len__(self) -> int:
        return len(self.vertices)

    def degree(self, v) -> int:
        return len(self.adj[v])

    def has_edge(self, u, v) -> bool:
        return v in self.adj[u]

    def sorted_edges(self) -> list[tuple]:
        out = [tuple(sorted(e, key=sort_key)) for e in self.edges]
        return sorted(out, key=lambda e: (sort_key(e[0]), sort_key(e[1])))

    def induced(self, vertices: Iterable) -> "AbstractGraph":
        keep = set(vertices)
        return AbstractGraph(keep, (e for e in self.edges if e <= keep))

    def without_isolated(self) -> "AbstractGraph":
        return self.induced(v for v in self.vertices if self.adj[v])

    @classmethod
    def cycle(cls, n: int) -> "AbstractGraph":
        return cls(range(n), ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def complete(cls, n: int) -> "AbstractGraph":
        return cls(range(n), combinations(range(n), 2))

    @classmethod
    def path(cls, n: int) -> "AbstractGraph":
        return cls(range(n), ((i, i + 1) for i in range(n - 1)))


def connected_components(g: AbstractGraph) -> list[list]:
    """Components in order of their smallest vertex, each listed in BFS order."""
    seen: set = set()
    comps = []
    for root in g.vertices:
        if root in seen:
            continue
        seen.add(root)
        order = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(g.adj[u], key=sort_key):
                if w not in seen:
                    seen.add(w)
                    order.append(w)
                    queue.append(w)
        comps.append(order)
    return comps


def is_bipartite(g: AbstractGraph) -> dict | None:
    """A proper 2-coloring ``vertex -> 0/1`` or ``None`` when an odd cycle exists.

    The first vertex of every component (in sorted order) gets color 0.
    """
    side: dict = {}
    for root in g.vertices:
        if root in side:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in side:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return side


class GeometricGraph:
    """A simple graph with a straight-line drawing in general position.

    ``edges`` maps an edge id to its two endpoint ids. When built from plain
    pairs, edge ids are ``"u-v"``.
    """

    def __init__(
        self,
        coords: Mapping[str, Point],
        edges: Mapping[str, tuple[str, str]] | Iterable[tuple[str, str]],
        *,
        validate: bool = True,
        warn_isolated: bool = True,
    ) -> None:
        self.coords: dict[str, Point] = {
            str(v): p if isinstance(p, Point) else Point(*p) for v, p in coords.items()
        }
        if not isinstance(edges, Mapping):
            edges = {f"{u}-{v}": (str(u), str(v)) for u, v in edges}
        self.edges: dict[str, tuple[str, str]] = {
            str(k): (str(u), str(v)) for k, (u, v) in edges.items()
        }
        self.vertices: tuple[str, ...] = tuple(sorted(self.coords, key=sort_key))
        self.underlying = AbstractGraph(self.vertices, self.edges.values())
        if len(self.underlying.edges) != len(self.edges):
            raise GraphError("multi-edges are not allowed")
        if validate:
            report = self.position_report()
            if not report.ok:
                raise GeneralPositionError(report)
        if warn_isolated and self.isolated_vertices():
            warnings.warn(
                f"isolated vertices {self.isolated_vertices()}; deciders will reject this graph",
                stacklevel=2,
            )

    def __repr__(self) -> str:
        return f"GeometricGraph(|V|={len(self.vertices)}, |E|={len(self.edges)})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GeometricGraph)
            and self.coords == other.coords
            and self.edges == other.edges
        )

    def position_report(self) -> PositionReport:
        index = {v: i for i, v in enumerate(self.vertices)}
        return validate_general_position(
            [self.coords[v] for v in self.vertices],
            [(index[u], index[v]) for u, v in self.edges.values()],
        )

    def segment(self, edge_id: str) -> Segment:
        u, v = self.edges[edge_id]
        return Segment(self.coords[u], self.coords[v])

    def edge_ids(self) -> list[str]:
        return sorted(self.edges, key=sort_key)

    def isolated_vertices(self) -> list[str]:
        return [v for v in self.vertices if not self.underlying.adj[v]]

    def require_no_isolated(self) -> None:
        iso = self.isolated_vertices()
        if iso:
            raise IsolatedVertexError(f"isolated vertices {iso} are not allowed here")

    @cached_property
    def crossings(self) -> frozenset:
        """Unordered pairs of edge ids whose segments properly cross."""
        out = set()
        ids = self.edge_ids()
        for e, f in combinations(ids, 2):
            try:
                if segments_cross(self.segment(e), self.segment(f)):
                    out.add(Pair((e, f)))
            except DegeneracyError as exc:
                raise GeneralPositionError(PositionReport(overlapping=[(e, f)])) from exc
        return frozenset(out)

    @cached_property
    def vertex_crossings(self) -> frozenset:
        """Crossing pairs expressed with endpoints: ``{{x, y}, {u, v}}``."""
        return frozenset(
            Pair(Pair(self.edges[e]) for e in pair) for pair in self.crossings
        )

    def subgraph(self, edge_ids: Iterable[str]) -> "GeometricGraph":
        """Geometric subgraph spanned by the given edges (no isolated vertices)."""
        edges = {e: self.edges[e] for e in edge_ids}
        verts = {v for uv in edges.values() for v in uv}
        return GeometricGraph(
            {v: self.coords[v] for v in verts}, edges, validate=False, warn_isolated=False
        )

    def relabeled(self, mapping: Mapping[str, str]) -> "GeometricGraph":
        return GeometricGraph(
            {mapping[v]: p for v, p in self.coords.items()},
            {e: (mapping[u], mapping[v]) for e, (u, v) in self.edges.items()},
            validate=False,
            warn_isolated=False,
        )


def crossing_set(g: GeometricGraph) -> frozenset:
    return g.crossings


def edge_crossing_graph(g: GeometricGraph) -> AbstractGraph:
    """EX: one vertex per edge id, adjacent when the edges cross."""
    return AbstractGraph(g.edges, g.crossings)


def crossing_edges(g: GeometricGraph) -> list[str]:
    involved = {e for pair in g.crossings for e in pair}
    return [e for e in g.edge_ids() if e in involved]


def crossing_subgraph(g: GeometricGraph) -> GeometricGraph:
    return g.subgraph(crossing_edges(g))


@dataclass(frozen=True)
class CrossingComponent:
    name: str
    vertices: tuple[str, ...]
    edges: tuple[str, ...]
    self_crossing: bool


@dataclass(frozen=True)
class ComponentGraph:
    graph: AbstractGraph
    components: tuple[CrossingComponent, ...]

    def component_of_edge(self) -> dict[str, str]:
        return {e: c.name for c in self.components for e in c.edges}

    def component_of_vertex(self) -> dict[str, str]:
        return {v: c.name for c in self.components for v in c.vertices}


def crossing_component_graph(g: GeometricGraph) -> ComponentGraph:
    """Components of the crossing subgraph, joined when their edges cross.

    A component crossing itself is flagged via ``self_crossing`` rather than a loop.
    """
    sub = crossing_subgraph(g)
    comps = []
    owner: dict[str, str] = {}
    for i, verts in enumerate(connected_components(sub.underlying)):
        name = f"C{i}"
        vs = set(verts)
        edges = tuple(e for e in sub.edge_ids() if sub.edges[e][0] in vs)
        for e in edges:
            owner[e] = name
        comps.append([name, tuple(sorted(vs, key=sort_key)), edges])
    links = set()
    internal = set()
    for pair in g.crossings:
        a, b = (owner[e] for e in pair)
        if a == b:
            internal.add(a)
        else:
            links.add(Pair((a, b)))
    components = tuple(
        CrossingComponent(name, verts, edges, name in internal) for name, verts, edges in comps
    )
    return ComponentGraph(AbstractGraph([c.name for c in components], links), components)


def co_crossing_pairs(g: GeometricGraph) -> frozenset:
    """Vertex pairs ``{u, v}`` where an edge at ``u`` crosses an edge at ``v``."""
    out = set()
    for e, f in g.crossings:
        for u in g.edges[e]:
            for v in g.edges[f]:
                out.add(Pair((u, v)))
    return frozenset(out)
