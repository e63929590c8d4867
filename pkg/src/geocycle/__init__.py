"""Deciding when geometric graphs map onto geometric 3-, 4- and 5-cycles."""

from .geometry import Point, Segment, orientation, segments_cross, validate_general_position
from .graphs import AbstractGraph, GeometricGraph

__all__ = [
    "AbstractGraph",
    "GeometricGraph",
    "Point",
    "Segment",
    "orientation",
    "segments_cross",
    "validate_general_position",
]
