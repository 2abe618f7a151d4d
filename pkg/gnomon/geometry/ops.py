"""
Straightedge-and-compass primitives over exact tower coordinates.

The three intersection operations are the only way new points arise; the
line-circle case is the only one that may grow the tower (via ``Tower.sqrt``).
"""

import functools
from collections.abc import Iterable

from gnomon.geometry.errors import CoincidentLines, CoincidentPoints, ConcentricCircles, ParallelLines
from gnomon.geometry.types import Circle, Line, Point
from gnomon.tower import FieldElement


def dist2(p: Point, q: Point) -> FieldElement:
    dx, dy = p - q
    return dx * dx + dy * dy


def dist(p: Point, q: Point) -> FieldElement:
    return dist2(p, q).sqrt()


def compare_points(p: Point, q: Point) -> int:
    """Lexicographic (x, y) order decided by exact signs."""
    return p.x.compare(q.x) or p.y.compare(q.y)


def canonical_order(points: Iterable[Point]) -> list[Point]:
    return sorted(points, key=functools.cmp_to_key(compare_points))


def line_through(p: Point, q: Point) -> Line:
    if p == q:
        raise CoincidentPoints(f"cannot draw a line through a single point {p}")
    return Line(
        a=p.y - q.y,
        b=q.x - p.x,
        c=p.x * q.y - q.x * p.y,
    )


def circle_center_through(c: Point, p: Point) -> Circle:
    if c == p:
        raise CoincidentPoints(f"circle through its own center {c} has zero radius")
    return Circle(center=c, radius_sq=dist2(c, p))


def circle_center_radius_of(c: Point, p: Point, q: Point) -> Circle:
    """Compass transfer: a circle about ``c`` with radius |pq|."""
    if p == q:
        raise CoincidentPoints(f"radius endpoints coincide at {p}")
    return Circle(center=c, radius_sq=dist2(p, q))


def intersect_line_line(l1: Line, l2: Line) -> Point:
    det = l1.a * l2.b - l2.a * l1.b
    if det.is_zero():
        if l1.same_as(l2):
            raise CoincidentLines("lines coincide")
        raise ParallelLines("lines are parallel")
    return Point(
        x=(l1.b * l2.c - l2.b * l1.c) / det,
        y=(l1.c * l2.a - l2.c * l1.a) / det,
    )


def intersect_line_circle(line: Line, circle: Circle) -> list[Point]:
    """
    Intersections in canonical order: two points, one (tangency), or none.

    With n = a² + b² and f = a·h + b·k + c for center (h, k), the foot of the
    perpendicular is center − (f/n)·(a, b) and the chord half-length along the
    direction (−b, a) is t = √((r²·n − f²)/n²).
    """
    a, b, c = line.a, line.b, line.c
    h, k = circle.center.x, circle.center.y

    n = a * a + b * b
    f = a * h + b * k + c
    disc = circle.radius_sq * n - f * f

    s = disc.sign()
    if s < 0:
        return []

    foot = Point(x=h - a * f / n, y=k - b * f / n)
    if s == 0:
        return [foot]

    t = (disc / (n * n)).sqrt()
    first = Point(x=foot.x - b * t, y=foot.y + a * t)
    second = Point(x=foot.x + b * t, y=foot.y - a * t)
    return canonical_order([first, second])


def radical_line(c1: Circle, c2: Circle) -> Line:
    if c1.center == c2.center:
        raise ConcentricCircles(f"circles share the center {c1.center}")
    h1, k1 = c1.center.x, c1.center.y
    h2, k2 = c2.center.x, c2.center.y
    return Line(
        a=2 * (h2 - h1),
        b=2 * (k2 - k1),
        c=h1 * h1 + k1 * k1 - c1.radius_sq - h2 * h2 - k2 * k2 + c2.radius_sq,
    )


def intersect_circle_circle(c1: Circle, c2: Circle) -> list[Point]:
    return intersect_line_circle(radical_line(c1, c2), c1)


def contains(obj: Line | Circle, p: Point) -> bool:
    return obj.contains(p)
