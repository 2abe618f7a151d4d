from fractions import Fraction

import pytest
from gnomon.geometry import (
    Circle,
    CoincidentLines,
    CoincidentPoints,
    ConcentricCircles,
    DegenerateCircle,
    DegenerateLine,
    Line,
    ParallelLines,
    Point,
    canonical_order,
    circle_center_radius_of,
    circle_center_through,
    contains,
    dist,
    dist2,
    intersect_circle_circle,
    intersect_line_circle,
    intersect_line_line,
    line_through,
)
from gnomon.tower import FieldElement, Scalar, Tower, TowerMismatch
from gnomon.tower import coords as C
from hypothesis import assume, given, settings
from hypothesis import strategies as st

# Helpers


def pt(t: Tower, x: Scalar, y: Scalar) -> Point:
    return Point(t.zero() + x, t.zero() + y)


small = st.integers(min_value=-6, max_value=6)


def reduced_level(e: FieldElement) -> int:
    """Lowest tower level holding ``e``."""
    return C.level_of(C.reduce(e.coords))


# Tests: constructors


class TestConstructors:
    def test_line_through_contains_both_points(self):
        t = Tower()
        p, q = pt(t, 1, 2), pt(t, -3, 5)
        line = line_through(p, q)
        assert contains(line, p) and contains(line, q)
        assert not contains(line, pt(t, 0, 0))

    def test_line_through_coincident_points_raises(self):
        t = Tower()
        with pytest.raises(CoincidentPoints):
            line_through(pt(t, 1, 1), pt(t, 1, 1))

    def test_circle_center_through(self):
        t = Tower()
        c = circle_center_through(pt(t, 0, 0), pt(t, 3, 4))
        assert c.radius_sq == 25
        assert contains(c, pt(t, -5, 0))

    def test_circle_through_own_center_raises(self):
        t = Tower()
        with pytest.raises(CoincidentPoints):
            circle_center_through(pt(t, 2, 2), pt(t, 2, 2))

    def test_compass_transfer(self):
        t = Tower()
        c = circle_center_radius_of(pt(t, 10, 0), pt(t, 0, 0), pt(t, 1, 1))
        assert c.radius_sq == 2
        with pytest.raises(CoincidentPoints):
            circle_center_radius_of(pt(t, 10, 0), pt(t, 1, 1), pt(t, 1, 1))

    def test_degenerate_objects_are_rejected(self):
        t = Tower()
        with pytest.raises(DegenerateLine):
            Line(t.zero(), t.zero(), t.one())
        with pytest.raises(DegenerateCircle):
            Circle(pt(t, 0, 0), t.zero())

    def test_point_coordinates_must_share_a_tower(self):
        with pytest.raises(TowerMismatch):
            Point(Tower().one(), Tower().one())

    def test_distance(self):
        t = Tower()
        assert dist(pt(t, 0, 0), pt(t, 3, 4)) == 5
        d = dist(pt(t, 0, 0), pt(t, 1, 1))
        assert d * d == 2
        assert t.height == 1


# Tests: intersections


class TestIntersections:
    def test_line_line(self):
        t = Tower()
        p = intersect_line_line(line_through(pt(t, 0, 0), pt(t, 2, 2)), line_through(pt(t, 0, 2), pt(t, 2, 0)))
        assert p == pt(t, 1, 1)

    def test_parallel_and_coincident_lines(self):
        t = Tower()
        l1 = line_through(pt(t, 0, 0), pt(t, 1, 1))
        l2 = line_through(pt(t, 0, 1), pt(t, 1, 2))
        l3 = line_through(pt(t, 2, 2), pt(t, 5, 5))
        with pytest.raises(ParallelLines):
            intersect_line_line(l1, l2)
        with pytest.raises(CoincidentLines):
            intersect_line_line(l1, l3)

    def test_line_circle_two_points_in_canonical_order(self):
        t = Tower()
        circle = circle_center_through(pt(t, 0, 0), pt(t, 1, 0))
        points = intersect_line_circle(line_through(pt(t, 0, 0), pt(t, 1, 1)), circle)
        assert len(points) == 2
        r = t.sqrt(Fraction(1, 2))
        assert points[0] == pt(t, -r, -r)
        assert points[1] == pt(t, r, r)

    def test_line_circle_tangent_and_miss(self):
        t = Tower()
        circle = circle_center_through(pt(t, 0, 0), pt(t, 1, 0))
        tangent = line_through(pt(t, 1, -3), pt(t, 1, 3))
        assert intersect_line_circle(tangent, circle) == [pt(t, 1, 0)]
        miss = line_through(pt(t, 2, -3), pt(t, 2, 3))
        assert intersect_line_circle(miss, circle) == []

    def test_vertical_line_orders_by_y(self):
        t = Tower()
        circle = circle_center_through(pt(t, 0, 0), pt(t, 1, 0))
        points = intersect_line_circle(line_through(pt(t, 0, -5), pt(t, 0, 5)), circle)
        assert points == [pt(t, 0, -1), pt(t, 0, 1)]

    def test_circle_circle_equilateral_apex(self):
        t = Tower()
        o, e = pt(t, 0, 0), pt(t, 1, 0)
        points = intersect_circle_circle(circle_center_through(o, e), circle_center_through(e, o))
        h = t.sqrt(3) / 2
        assert points == [pt(t, Fraction(1, 2), -h), pt(t, Fraction(1, 2), h)]

    def test_circle_circle_is_symmetric(self):
        t = Tower()
        c1 = Circle(pt(t, 0, 0), t.rational(4))
        c2 = Circle(pt(t, 3, 1), t.rational(5))
        forward = intersect_circle_circle(c1, c2)
        height = t.height
        assert len(forward) == 2
        assert intersect_circle_circle(c2, c1) == forward
        assert t.height == height

    def test_line_circle_pair_is_conjugate_over_the_previous_tower(self):
        # (x − √2)² + x² = 4 on the diagonal gives x = (√2 ± √6)/2, and √6 is not in Q(√2)
        t = Tower()
        r2 = t.sqrt(2)
        before = t.height
        circle = Circle(pt(t, r2, 0), t.rational(4))
        p, q = intersect_line_circle(line_through(pt(t, 0, 0), pt(t, 1, 1)), circle)
        assert t.height == before + 1
        for u, v in ((p.x, q.x), (p.y, q.y)):
            assert reduced_level(u + v) <= before
            assert reduced_level(u * v) <= before
            assert reduced_level(u) == before + 1

    def test_concentric_circles_raise(self):
        t = Tower()
        o = pt(t, 0, 0)
        with pytest.raises(ConcentricCircles):
            intersect_circle_circle(circle_center_through(o, pt(t, 1, 0)), circle_center_through(o, pt(t, 2, 0)))

    def test_disjoint_circles_do_not_meet(self):
        t = Tower()
        c1 = circle_center_through(pt(t, 0, 0), pt(t, 1, 0))
        c2 = circle_center_through(pt(t, 5, 0), pt(t, 6, 0))
        assert intersect_circle_circle(c1, c2) == []

    def test_canonical_order_is_lexicographic(self):
        t = Tower()
        ordered = canonical_order([pt(t, 1, 0), pt(t, 0, 1), pt(t, 0, -1)])
        assert ordered == [pt(t, 0, -1), pt(t, 0, 1), pt(t, 1, 0)]


# Tests: incidence (property-based)

offsets = st.integers(min_value=-4, max_value=4)
radii_sq = st.integers(min_value=1, max_value=36)


@settings(max_examples=200, deadline=None)
@given(small, small, small, small, small, small, radii_sq)
def test_line_circle_points_lie_on_both_objects(x1, y1, x2, y2, hx, hy, r_sq):
    t = Tower()
    assume((x1, y1) != (x2, y2))
    line = line_through(pt(t, x1, y1), pt(t, x2, y2))
    circle = Circle(pt(t, hx, hy), t.rational(r_sq))

    points = intersect_line_circle(line, circle)
    assume(points)
    assert points == canonical_order(points)
    for p in points:
        assert contains(line, p)
        assert contains(circle, p)

    if len(points) == 2:
        p, q = points
        for u, v in ((p.x, q.x), (p.y, q.y)):
            assert (u + v).is_rational()
            assert (u * v).is_rational()


@settings(max_examples=200, deadline=None)
@given(small, small, offsets, offsets, radii_sq, radii_sq)
def test_circle_circle_points_lie_on_both_circles(hx, hy, dx, dy, r1_sq, r2_sq):
    t = Tower()
    assume((dx, dy) != (0, 0))
    circle = Circle(pt(t, hx, hy), t.rational(r1_sq))
    other = Circle(pt(t, hx + dx, hy + dy), t.rational(r2_sq))

    points = intersect_circle_circle(circle, other)
    assume(points)
    assert points == canonical_order(points)
    for p in points:
        assert contains(circle, p)
        assert contains(other, p)
        assert dist2(p, other.center) == r2_sq
    assert intersect_circle_circle(other, circle) == points
