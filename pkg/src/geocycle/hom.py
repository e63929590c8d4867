"""Backtracking search for abstract and geometric graph homomorphisms.

The same engine serves four kinds of map. Abstract homomorphisms only
preserve edges. Geometric ones also carry every crossing pair onto a crossing
pair. Injective geometric maps add injectivity, and geometric isomorphisms are
bijections preserving edges, non-edges, crossings and non-crossings.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Mapping, Union

from .graphs import AbstractGraph, GeometricGraph, Pair, co_crossing_pairs, sort_key

AnyGraph = Union[AbstractGraph, GeometricGraph]
VertexMap = dict


class HomKind(str, enum.Enum):
    ABSTRACT = "abstract"
    GEOMETRIC = "geometric"
    INJECTIVE_GEOMETRIC = "injective_geometric"
    GEOMETRIC_ISOMORPHISM = "geometric_isomorphism"

    @property
    def geometric(self) -> bool:
        return self is not HomKind.ABSTRACT


class SearchBudgetExceeded(RuntimeError):
    def __init__(self, budget: int) -> None:
        self.budget = budget
        super().__init__(f"search exceeded its budget of {budget} nodes")


class Budget:
    """Shared node counter; ``None`` limit means unbounded."""

    def __init__(self, limit: int | None = None) -> None:
        self.limit = limit
        self.used = 0

    def tick(self) -> None:
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise SearchBudgetExceeded(self.limit)


@dataclass(frozen=True)
class Verification:
    ok: bool
    witness: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def _abstract(g: AnyGraph) -> AbstractGraph:
    return g.underlying if isinstance(g, GeometricGraph) else g


def _check_kind(g: AnyGraph, h: AnyGraph, kind: HomKind) -> None:
    if kind.geometric and not (isinstance(g, GeometricGraph) and isinstance(h, GeometricGraph)):
        raise TypeError(f"{kind.value} maps need geometric graphs on both sides")


def verify_map(g: AnyGraph, h: AnyGraph, f: Mapping, kind: HomKind | str) -> Verification:
    """Check ``f`` against the conditions of ``kind``; on failure name one violation."""
    kind = HomKind(kind)
    _check_kind(g, h, kind)
    ga, ha = _abstract(g), _abstract(h)
    missing = [v for v in ga.vertices if v not in f]
    if missing:
        return Verification(False, f"map is not defined on {missing}")
    stray = [v for v in ga.vertices if f[v] not in ha.adj]
    if stray:
        return Verification(False, f"{stray[0]} maps to {f[stray[0]]!r}, not a target vertex")

    for u, v in ga.sorted_edges():
        if f[u] == f[v] or not ha.has_edge(f[u], f[v]):
            return Verification(False, f"edge {u}{v} maps to non-edge {f[u]}{f[v]}")
    if kind is HomKind.ABSTRACT:
        return Verification(True)

    image = lambda e: Pair(f[x] for x in e)  # noqa: E731
    h_cross = h.vertex_crossings
    for pair in sorted(g.vertex_crossings, key=_pair_key):
        e1, e2 = tuple(pair)
        if Pair((image(e1), image(e2))) not in h_cross:
            return Verification(
                False,
                f"crossing {_fmt(e1)} x {_fmt(e2)} maps to non-crossing "
                f"{_fmt(image(e1))} x {_fmt(image(e2))}",
            )
    if kind is HomKind.GEOMETRIC:
        return Verification(True)

    seen: dict = {}
    for v in ga.vertices:
        if f[v] in seen:
            return Verification(False, f"{seen[f[v]]} and {v} both map to {f[v]}")
        seen[f[v]] = v
    if kind is HomKind.INJECTIVE_GEOMETRIC:
        return Verification(True)

    if len(seen) != len(ha.vertices):
        return Verification(False, "map is not onto the target vertices")
    inv = {t: s for s, t in seen.items()}
    for a, b in ha.sorted_edges():
        if not ga.has_edge(inv[a], inv[b]):
            return Verification(False, f"target edge {a}{b} has no preimage edge")
    pre = lambda e: Pair(inv[x] for x in e)  # noqa: E731
    for pair in sorted(h_cross, key=_pair_key):
        e1, e2 = tuple(pair)
        if Pair((pre(e1), pre(e2))) not in g.vertex_crossings:
            return Verification(
                False, f"target crossing {_fmt(e1)} x {_fmt(e2)} has no preimage crossing"
            )
    return Verification(True)


def _fmt(edge) -> str:
    return "".join(str(x) for x in sorted(edge, key=sort_key))


def _pair_key(pair) -> tuple:
    return tuple(sorted(_fmt(e) for e in pair))


class _Search:
    def __init__(
        self,
        g: AnyGraph,
        h: AnyGraph,
        kind: HomKind,
        injective: bool,
        budget: Budget | None,
        fixed: Mapping | None = None,
    ) -> None:
        self.ga, self.ha = _abstract(g), _abstract(h)
        self.kind = kind
        self.injective = injective or kind in (
            HomKind.INJECTIVE_GEOMETRIC,
            HomKind.GEOMETRIC_ISOMORPHISM,
        )
        self.budget = budget or Budget()
        self.fixed = dict(fixed or {})
        self.targets = sorted(self.ha.vertices, key=sort_key)

        cocross: dict = {v: set() for v in self.ga.vertices}
        self.g_cross: list = []
        self.h_cross: frozenset = frozenset()
        if kind.geometric:
            for pair in co_crossing_pairs(g):
                u, v = tuple(pair)
                cocross[u].add(v)
                cocross[v].add(u)
            self.g_cross = [tuple(tuple(e) for e in pair) for pair in g.vertex_crossings]
            self.h_cross = h.vertex_crossings
        self.order = sorted(
            self.ga.vertices,
            key=lambda v: (-(self.ga.degree(v) + len(cocross[v])), sort_key(v)),
        )
        pos = {v: i for i, v in enumerate(self.order)}
        self.back_adj = [
            [w for w in self.ga.adj[v] if pos[w] < pos[v]] for v in self.order
        ]
        self.back_distinct = [
            [w for w in cocross[v] if pos[w] < pos[v]] for v in self.order
        ]
        # crossing pairs become checkable once their last endpoint is placed
        self.closing: list[list] = [[] for _ in self.order]
        for e1, e2 in self.g_cross:
            last = max(pos[x] for x in (*e1, *e2))
            self.closing[last].append((e1, e2))

    def feasible(self) -> bool:
        if self.kind is HomKind.GEOMETRIC_ISOMORPHISM:
            ga, ha = self.ga, self.ha
            if (len(ga.vertices), len(ga.edges)) != (len(ha.vertices), len(ha.edges)):
                return False
            if len(self.g_cross) != len(self.h_cross):
                return False
        if self.injective and len(self.ga.vertices) > len(self.ha.vertices):
            return False
        return True

    def run(self) -> Iterator[dict]:
        if not self.feasible():
            return
        f: dict = {}
        used: set = set()
        yield from self._extend(0, f, used)

    def _extend(self, depth: int, f: dict, used: set) -> Iterator[dict]:
        if depth == len(self.order):
            yield {v: f[v] for v in self.ga.vertices}
            return
        v = self.order[depth]
        hadj = self.ha.adj
        candidates = [self.fixed[v]] if v in self.fixed else self.targets
        for t in candidates:
            self.budget.tick()
            if self.injective and t in used:
                continue
            if any(t not in hadj[f[w]] for w in self.back_adj[depth]):
                continue
            if any(f[w] == t for w in self.back_distinct[depth]):
                continue
            f[v] = t
            if self._crossings_hold(depth, f):
                used.add(t)
                yield from self._extend(depth + 1, f, used)
                used.discard(t)
            del f[v]

    def _crossings_hold(self, depth: int, f: dict) -> bool:
        for (a, b), (c, d) in self.closing[depth]:
            fa, fb, fc, fd = f[a], f[b], f[c], f[d]
            if fa == fb or fc == fd:
                return False
            if Pair((Pair((fa, fb)), Pair((fc, fd)))) not in self.h_cross:
                return False
        return True


def enumerate_homomorphisms(
    g: AnyGraph,
    h: AnyGraph,
    kind: HomKind | str = HomKind.ABSTRACT,
    *,
    injective: bool = False,
    budget: Budget | None = None,
    fixed: Mapping | None = None,
) -> Iterator[dict]:
    """Yield every map of the given kind once, in a deterministic order.

    ``injective`` additionally forces injectivity on an abstract search, and
    ``fixed`` pins the images of some source vertices.
    """
    kind = HomKind(kind)
    _check_kind(g, h, kind)
    return _Search(g, h, kind, injective, budget, fixed).run()


def find_homomorphism(
    g: AnyGraph,
    h: AnyGraph,
    kind: HomKind | str = HomKind.ABSTRACT,
    *,
    injective: bool = False,
    budget: Budget | None = None,
) -> dict | None:
    return next(enumerate_homomorphisms(g, h, kind, injective=injective, budget=budget), None)


def automorphisms(g: AbstractGraph) -> list[dict]:
    return list(enumerate_homomorphisms(g, g, HomKind.ABSTRACT, injective=True))


def compose(f: Mapping, g: Mapping) -> dict:
    """``g`` after ``f``."""
    return {v: g[f[v]] for v in f}


def identifiable_pairs(g: GeometricGraph) -> frozenset:
    """Vertex pairs that some geometric homomorphism could still identify."""
    blocked = set(g.underlying.edges) | co_crossing_pairs(g)
    return frozenset(
        Pair(p) for p in combinations(g.vertices, 2) if Pair(p) not in blocked
    )


def strong_product(g: AbstractGraph, h: AbstractGraph) -> AbstractGraph:
    verts = [(a, b) for a in g.vertices for b in h.vertices]
    edges = []
    for (a, b), (c, d) in combinations(verts, 2):
        if (a == c or g.has_edge(a, c)) and (b == d or h.has_edge(b, d)):
            edges.append(((a, b), (c, d)))
    return AbstractGraph(verts, edges)


def _greedy_clique(g: AbstractGraph) -> list:
    best: list = []
    for start in g.vertices:
        clique = [start]
        for v in sorted(g.adj[start], key=lambda x: -g.degree(x)):
            if all(v in g.adj[c] for c in clique):
                clique.append(v)
        if len(clique) > len(best):
            best = clique
    return best


def chromatic_number(g: AbstractGraph, cap: int = 8, *, budget: Budget | None = None) -> int | None:
    """Exact chromatic number, or ``None`` if it exceeds ``cap``.

    DSATUR-ordered backtracking for each k starting from a greedy clique bound.
    """
    if cap > 8:
        raise ValueError("cap must be at most 8")
    if not g.vertices:
        return 0
    if not g.edges:
        return 1
    lower = len(_greedy_clique(g))
    for k in range(lower, cap + 1):
        if _colorable(g, k, budget or Budget()):
            return k
    return None


def _colorable(g: AbstractGraph, k: int, budget: Budget) -> bool:
    adj = g.adj
    color: dict = {}
    # colors seen among each vertex's colored neighbours, with multiplicity
    seen: dict = {v: [0] * k for v in g.vertices}

    def pick():
        best, key = None, None
        for v in g.vertices:
            if v in color:
                continue
            sat = sum(1 for c in seen[v] if c)
            cand = (sat, len(adj[v]))
            if key is None or cand > key:
                best, key = v, cand
        return best

    def assign(v, c, delta):
        for w in adj[v]:
            seen[w][c] += delta

    def solve(n_used: int) -> bool:
        v = pick()
        if v is None:
            return True
        # symmetry breaking: at most one fresh color per branch
        for c in range(min(n_used + 1, k)):
            budget.tick()
            if seen[v][c]:
                continue
            color[v] = c
            assign(v, c, 1)
            if solve(max(n_used, c + 1)):
                return True
            assign(v, c, -1)
            del color[v]
        return False

    return solve(0)
