"""Exact planar predicates over rational coordinates."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


class GeometryError(ValueError):
    pass


class DegeneracyError(GeometryError):
    """Two segments overlap or touch in a way general position forbids."""


class DuplicatePointError(GeometryError):
    pass


@dataclass(frozen=True, order=True)
class Point:
    x: Fraction
    y: Fraction

    def __init__(self, x: Number | str, y: Number | str) -> None:
        object.__setattr__(self, "x", _to_fraction(x))
        object.__setattr__(self, "y", _to_fraction(y))

    def __iter__(self):
        yield self.x
        yield self.y

    def __repr__(self) -> str:
        return f"Point({self.x}, {self.y})"


def _to_fraction(value) -> Fraction:
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, float):
        raise TypeError(f"floating point coordinate {value!r} rejected; use a rational")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as a coordinate")


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise GeometryError(f"degenerate segment at {self.a}")


def orientation(p: Point, q: Point, r: Point) -> int:
    """Sign of twice the signed area of triangle pqr (+1 counterclockwise)."""
    if p.x.denominator == p.y.denominator == q.x.denominator == q.y.denominator == 1 and (
        r.x.denominator == r.y.denominator == 1
    ):
        # integer fast path; Fraction arithmetic dominates sampling otherwise
        px, py, qx, qy, rx, ry = (
            p.x.numerator, p.y.numerator, q.x.numerator, q.y.numerator, r.x.numerator, r.y.numerator
        )
        det = (qx - px) * (ry - py) - (qy - py) * (rx - px)
    else:
        det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    return (det > 0) - (det < 0)


def _on_closed_segment(p: Point, s: Segment) -> bool:
    # assumes p collinear with s
    return min(s.a.x, s.b.x) <= p.x <= max(s.a.x, s.b.x) and min(s.a.y, s.b.y) <= p.y <= max(
        s.a.y, s.b.y
    )


def segments_cross(s: Segment, t: Segment) -> bool:
    """True iff the open interiors of ``s`` and ``t`` meet in exactly one point.

    Segments sharing an endpoint never cross. Overlap, or an endpoint lying in the
    other segment's interior, raises :class:`DegeneracyError`.
    """
    shared = {s.a, s.b} & {t.a, t.b}
    if len(shared) == 2:
        raise DegeneracyError(f"coincident segments {s} and {t}")
    if shared:
        (common,) = shared
        u = s.b if s.a == common else s.a
        v = t.b if t.a == common else t.a
        if orientation(common, u, v) == 0 and (
            _on_closed_segment(u, Segment(common, v)) or _on_closed_segment(v, Segment(common, u))
        ):
            raise DegeneracyError(f"overlapping segments {s} and {t}")
        return False

    o1 = orientation(s.a, s.b, t.a)
    o2 = orientation(s.a, s.b, t.b)
    o3 = orientation(t.a, t.b, s.a)
    o4 = orientation(t.a, t.b, s.b)
    for o, p, seg in ((o1, t.a, s), (o2, t.b, s), (o3, s.a, t), (o4, s.b, t)):
        if o == 0 and _on_closed_segment(p, seg):
            raise DegeneracyError(f"segments {s} and {t} touch at {p}")
    return o1 * o2 < 0 and o3 * o4 < 0


def crossing_point(s: Segment, t: Segment) -> Point:
    """Exact intersection point of two crossing segments."""
    dx1, dy1 = s.b.x - s.a.x, s.b.y - s.a.y
    dx2, dy2 = t.b.x - t.a.x, t.b.y - t.a.y
    denom = dx1 * dy2 - dy1 * dx2
    if denom == 0:
        raise DegeneracyError(f"parallel segments {s} and {t}")
    lam = ((t.a.x - s.a.x) * dy2 - (t.a.y - s.a.y) * dx2) / denom
    return Point(s.a.x + lam * dx1, s.a.y + lam * dy1)


@dataclass
class PositionReport:
    collinear: list[tuple[int, int, int]] = field(default_factory=list)
    concurrent: list[tuple[int, ...]] = field(default_factory=list)
    overlapping: list[tuple[int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.collinear or self.concurrent or self.overlapping)

    def describe(self) -> str:
        parts = []
        if self.collinear:
            parts.append(f"collinear vertex triples {self.collinear}")
        if self.concurrent:
            parts.append(f"edges through a common interior point {self.concurrent}")
        if self.overlapping:
            parts.append(f"overlapping edges {self.overlapping}")
        return "; ".join(parts) if parts else "general position"


def validate_general_position(
    points: Sequence[Point], edges: Iterable[tuple[int, int]]
) -> PositionReport:
    """Check that no three points are collinear and no three edges share an interior point.

    Vertices are referred to by index into ``points``; edges by index into ``edges``.
    """
    if len(set(points)) != len(points):
        seen: dict[Point, int] = {}
        for i, p in enumerate(points):
            if p in seen:
                raise DuplicatePointError(f"vertices {seen[p]} and {i} coincide at {p}")
            seen[p] = i
    report = PositionReport()
    for i, j, k in combinations(range(len(points)), 3):
        if orientation(points[i], points[j], points[k]) == 0:
            report.collinear.append((i, j, k))

    segs = [Segment(points[u], points[v]) for u, v in edges]
    meeting: dict[Point, set[int]] = {}
    for i, j in combinations(range(len(segs)), 2):
        try:
            if not segments_cross(segs[i], segs[j]):
                continue
        except DegeneracyError:
            report.overlapping.append((i, j))
            continue
        meeting.setdefault(crossing_point(segs[i], segs[j]), set()).update((i, j))
    for pt in sorted(meeting):
        if len(meeting[pt]) >= 3:
            report.concurrent.append(tuple(sorted(meeting[pt])))
    return report
