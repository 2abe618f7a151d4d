from gnomon.geometry.errors import (
    CoincidentLines,
    CoincidentPoints,
    ConcentricCircles,
    DegenerateCircle,
    DegenerateLine,
    GeometryError,
    ParallelLines,
)
from gnomon.geometry.ops import (
    canonical_order,
    circle_center_radius_of,
    circle_center_through,
    compare_points,
    contains,
    dist,
    dist2,
    intersect_circle_circle,
    intersect_line_circle,
    intersect_line_line,
    line_through,
    radical_line,
)
from gnomon.geometry.types import Circle, Line, Point

__all__ = [
    # Types
    "Point",
    "Line",
    "Circle",
    # Constructions
    "line_through",
    "circle_center_through",
    "circle_center_radius_of",
    "intersect_line_line",
    "intersect_line_circle",
    "intersect_circle_circle",
    "radical_line",
    # Helpers
    "dist",
    "dist2",
    "compare_points",
    "canonical_order",
    "contains",
    # Errors
    "GeometryError",
    "CoincidentPoints",
    "ParallelLines",
    "CoincidentLines",
    "ConcentricCircles",
    "DegenerateLine",
    "DegenerateCircle",
]
