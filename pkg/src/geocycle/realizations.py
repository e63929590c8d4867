"""Sampled geometric realizations of a small graph and their homomorphism poset."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, permutations

from .corpus import random_points
from .graphs import AbstractGraph, GeometricGraph
from .hom import HomKind, automorphisms, find_homomorphism

BOX = 10**6


@dataclass(frozen=True)
class RealizationClass:
    representative: GeometricGraph
    signature: tuple
    observed: int = 1

    @property
    def crossing_count(self) -> int:
        return len(self.signature)


def _canonical_signature(g: GeometricGraph, autos: list[tuple[int, ...]], index: dict) -> tuple:
    """Lexicographically least crossing list over all automorphisms, on vertex indices."""
    pairs = [tuple((index[a], index[b]) for a, b in p) for p in g.vertex_crossings]
    best = None
    for sigma in autos:
        img = []
        for (a, b), (c, d) in pairs:
            e1 = (sigma[a], sigma[b]) if sigma[a] < sigma[b] else (sigma[b], sigma[a])
            e2 = (sigma[c], sigma[d]) if sigma[c] < sigma[d] else (sigma[d], sigma[c])
            img.append((e1, e2) if e1 < e2 else (e2, e1))
        img.sort()
        key = tuple(img)
        if best is None or key < best:
            best = key
    return best if best is not None else ()


def sample_realizations(g: AbstractGraph, trials: int = 10_000, seed: int = 0) -> list[RealizationClass]:
    """Observed realization classes of ``g`` over ``trials`` random placements.

    Classes are keyed by the crossing pattern up to automorphisms of ``g``,
    which is exactly geometric isomorphism between two drawings of ``g``.
    Returned in order of crossing count, then signature.
    """
    if len(g.vertices) > 7:
        raise ValueError("sampling is limited to graphs on at most 7 vertices")
    names = [str(v) for v in g.vertices]
    sg = AbstractGraph(names, ((str(u), str(v)) for u, v in g.sorted_edges()))
    index = {v: i for i, v in enumerate(names)}
    autos = [tuple(index[a[v]] for v in names) for a in automorphisms(sg)]
    edges = sg.sorted_edges()
    rng = random.Random(seed)
    found: dict[tuple, list] = {}
    valid = 0
    for _ in range(trials):
        try:
            pts = random_points(rng, len(names), BOX, max_tries=1)
        except RuntimeError:
            continue
        drawing = GeometricGraph(dict(zip(names, pts)), edges, validate=False, warn_isolated=False)
        if not drawing.position_report().ok:
            continue
        valid += 1
        sig = _canonical_signature(drawing, autos, index)
        if sig in found:
            found[sig][1] += 1
            continue
        for rep, _ in found.values():
            if find_homomorphism(drawing, rep, HomKind.GEOMETRIC_ISOMORPHISM) is not None:
                raise AssertionError("distinct crossing signatures for isomorphic drawings")
        found[sig] = [drawing, 1]
    if valid == 0:
        raise RuntimeError(f"none of {trials} placements was in general position")
    classes = [RealizationClass(rep, sig, count) for sig, (rep, count) in found.items()]
    return sorted(classes, key=lambda c: (c.crossing_count, c.signature))


@dataclass
class HomPoset:
    classes: list[RealizationClass]
    order: set[tuple[int, int]] = field(default_factory=set)
    witnesses: dict[tuple[int, int], dict] = field(default_factory=dict)

    def leq(self, i: int, j: int) -> bool:
        return (i, j) in self.order

    @property
    def covers(self) -> list[tuple[int, int]]:
        """Hasse edges ``(i, j)``: i below j with nothing strictly between."""
        n = len(self.classes)
        strict = {(i, j) for i, j in self.order if i != j}
        return sorted(
            (i, j)
            for i, j in strict
            if not any((i, k) in strict and (k, j) in strict for k in range(n))
        )

    @property
    def maximal(self) -> list[int]:
        n = len(self.classes)
        return [i for i in range(n) if not any((i, j) in self.order for j in range(n) if j != i)]

    @property
    def is_chain(self) -> bool:
        return all(self.leq(i, j) or self.leq(j, i) for i, j in combinations(range(len(self.classes)), 2))

    def linear_order(self) -> list[int] | None:
        if not self.is_chain:
            return None
        return sorted(range(len(self.classes)), key=lambda i: sum(self.leq(j, i) for j in range(len(self.classes))))


def build_poset(classes: list[RealizationClass]) -> HomPoset:
    """Order classes by existence of an injective geometric homomorphism."""
    poset = HomPoset(list(classes))
    for i, j in permutations(range(len(classes)), 2):
        f = find_homomorphism(
            classes[i].representative, classes[j].representative, HomKind.INJECTIVE_GEOMETRIC
        )
        if f is not None:
            poset.order.add((i, j))
            poset.witnesses[(i, j)] = f
    for i, c in enumerate(classes):
        poset.order.add((i, i))
        poset.witnesses[(i, i)] = {v: v for v in c.representative.vertices}
    for i, j in poset.order:
        if i != j and (j, i) in poset.order:
            raise AssertionError(f"classes {i} and {j} are mutually related")
    return poset


NAMED_GRAPHS = {
    "c4": lambda: AbstractGraph.cycle(4),
    "c5": lambda: AbstractGraph.cycle(5),
    "k5": lambda: AbstractGraph.complete(5),
}
