"""JSON documents for drawings and certificates.

Coordinates are exact: integers or ``"p/q"`` strings. Floats are refused.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Mapping

from .geometry import Point
from .graphs import GeometricGraph, GraphError, sort_key


class DocumentError(ValueError):
    pass


def _coord(raw: Any, where: str) -> Fraction:
    if isinstance(raw, bool) or isinstance(raw, float):
        raise DocumentError(f"{where}: {raw!r} is not an exact rational; write it as a string like \"3/4\"")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, str):
        text = raw.strip()
        if any(ch in text.lower() for ch in ".e"):
            raise DocumentError(f"{where}: {raw!r} looks like a decimal; use \"p/q\"")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise DocumentError(f"{where}: cannot parse {raw!r} as a rational") from exc
    raise DocumentError(f"{where}: expected a rational string, got {type(raw).__name__}")


def _format(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def graph_from_document(doc: Mapping, *, validate: bool = True) -> GeometricGraph:
    if not isinstance(doc, Mapping) or "vertices" not in doc or "edges" not in doc:
        raise DocumentError("document needs 'vertices' and 'edges'")
    coords: dict[str, Point] = {}
    for i, entry in enumerate(doc["vertices"]):
        try:
            vid = str(entry["id"])
            x, y = entry["x"], entry["y"]
        except (KeyError, TypeError) as exc:
            raise DocumentError(f"vertex #{i} needs id, x and y") from exc
        if vid in coords:
            raise DocumentError(f"duplicate vertex id {vid!r}")
        coords[vid] = Point(_coord(x, f"vertex {vid} x"), _coord(y, f"vertex {vid} y"))
    edges: dict[str, tuple[str, str]] = {}
    for i, entry in enumerate(doc["edges"]):
        if isinstance(entry, Mapping):
            eid, ends = str(entry.get("id", i)), entry.get("ends")
        else:
            eid, ends = None, entry
        if not isinstance(ends, (list, tuple)) or len(ends) != 2:
            raise DocumentError(f"edge #{i} must be a pair of vertex ids")
        u, v = (str(x) for x in ends)
        for w in (u, v):
            if w not in coords:
                raise DocumentError(f"edge #{i} references unknown vertex {w!r}")
        eid = eid if eid is not None else f"{u}-{v}"
        if eid in edges:
            raise DocumentError(f"duplicate edge {eid!r}")
        edges[eid] = (u, v)
    try:
        return GeometricGraph(coords, edges, validate=validate, warn_isolated=False)
    except GraphError as exc:
        raise DocumentError(str(exc)) from exc


def graph_to_document(g: GeometricGraph) -> dict:
    default_ids = all(e == f"{u}-{v}" for e, (u, v) in g.edges.items())
    edges: list = []
    for e in g.edge_ids():
        u, v = g.edges[e]
        edges.append([u, v] if default_ids else {"id": e, "ends": [u, v]})
    return {
        "vertices": [
            {"id": v, "x": _format(g.coords[v].x), "y": _format(g.coords[v].y)} for v in g.vertices
        ],
        "edges": edges,
    }


def load_graph(path: str | Path, *, validate: bool = True) -> GeometricGraph:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON ({exc})") from exc
    return graph_from_document(doc, validate=validate)


def save_graph(g: GeometricGraph, path: str | Path) -> None:
    Path(path).write_text(json.dumps(graph_to_document(g), indent=2) + "\n")


def certificate_document(target: str, mapping: Mapping[str, str], coloring: Mapping[str, int] | None = None) -> dict:
    doc: dict = {"target": target, "map": {v: mapping[v] for v in sorted(mapping, key=sort_key)}}
    if coloring:
        doc["edge_coloring"] = {e: coloring[e] for e in sorted(coloring, key=sort_key)}
    return doc


def load_certificate(path: str | Path) -> dict:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON ({exc})") from exc
    if not isinstance(doc, Mapping) or "map" not in doc or "target" not in doc:
        raise DocumentError("certificate needs 'target' and 'map'")
    doc["map"] = {str(k): str(v) for k, v in doc["map"].items()}
    return doc
