from fractions import Fraction

import pytest
from hypothesis import given, settings

from halvecut.core.errors import GeometryError, NoDualError, NotSeparableError
from halvecut.geom import (
    COINCIDENT,
    PARALLEL,
    HalfPlane,
    Line,
    Point,
    Polygon,
    Segment,
    Shear,
    as_rational,
    clip_polygon,
    convex_hull,
    cross_tangents,
    dual_line,
    dual_point,
    line_intersection,
    polygon_area,
    segment_intersection,
    sign,
)
from strategies import integer_points, non_vertical_lines, points


@settings(max_examples=300)
@given(points)
def test_point_duality_is_an_involution(p):
    assert dual_line(dual_point(p)) == p


@settings(max_examples=300)
@given(points, non_vertical_lines)
def test_duality_preserves_above_below(p, line):
    dual_of_line = dual_line(line)
    dual_of_point = dual_point(p)
    before = sign(p.y - line.y_at(p.x))
    after = sign(dual_of_line.y - dual_of_point.y_at(dual_of_line.x))
    assert before == after


def test_vertical_line_has_no_dual():
    with pytest.raises(NoDualError):
        dual_line(Line.vertical(3))


def test_lines_are_canonical():
    assert Line(2, 4, 6) == Line(1, 2, 3)
    assert Line(-1, 0, -2) == Line.vertical(2)
    assert Line(Fraction(1, 2), Fraction(1, 3), 1) == Line(3, 2, 6)
    assert len({Line(2, -2, 0), Line(-1, 1, 0)}) == 1


def test_degenerate_line_is_rejected():
    with pytest.raises(GeometryError):
        Line(0, 0, 1)


def test_floats_are_refused():
    with pytest.raises(GeometryError):
        as_rational(0.5)
    assert as_rational("3/4") == Fraction(3, 4)


def test_line_intersection_cases():
    assert line_intersection(Line.from_slope(1, 0), Line.from_slope(-1, 2)) == Point(1, 1)
    assert line_intersection(Line.from_slope(1, 0), Line.from_slope(1, 2)) is PARALLEL
    assert line_intersection(Line.from_slope(1, 0), Line(2, -2, 0)) is COINCIDENT


def test_segment_intersection_is_proper_only():
    assert segment_intersection(Segment(Point(0, 0), Point(2, 2)), Segment(Point(0, 2), Point(2, 0))) == Point(1, 1)
    assert segment_intersection(Segment(Point(0, 0), Point(1, 1)), Segment(Point(1, 1), Point(2, 0))) is None


def test_convex_hull_drops_interior_and_collinear_points(square):
    hull = convex_hull(square + [Point(1, 1), Point(1, 0)])
    assert set(hull.vertices) == set(square)
    assert polygon_area(hull.vertices) == 4
    assert convex_hull([Point(0, 0), Point(1, 1), Point(2, 2)]).vertices == (Point(0, 0), Point(2, 2))


def test_polygon_containment_is_closed(square):
    hull = convex_hull(square)
    assert hull.contains(Point(2, 1))
    assert hull.contains(Point(1, 1))
    assert not hull.contains(Point(3, 1))


def test_clip_polygon_by_halfplane(square):
    clipped = clip_polygon(square, HalfPlane(Line.vertical(1), 1, True))
    assert polygon_area(clipped) == 2


def test_cross_tangents_separate_the_polygons():
    left = convex_hull([Point(0, 0), Point(1, 0), Point(0, 1)])
    right = convex_hull([Point(5, 5), Point(6, 5), Point(5, 6)])
    first, second = cross_tangents(left, right)
    assert first != second
    for tangent in (first, second):
        sides_left = {tangent.side(v) for v in left.vertices} - {0}
        sides_right = {tangent.side(v) for v in right.vertices} - {0}
        assert len(sides_left) <= 1 and len(sides_right) <= 1
        assert not (sides_left & sides_right)


def test_cross_tangents_need_separated_polygons(square):
    with pytest.raises(NotSeparableError):
        cross_tangents(convex_hull(square), Polygon((Point(1, 1),)))


@given(integer_points, integer_points)
def test_shear_keeps_incidence_and_inverts(p, q):
    shear = Shear(Fraction(3, 7))
    assert shear.invert_point(shear.apply_point(p)) == p
    if p != q:
        line = Line.through(p, q)
        moved = shear.apply_line(line)
        assert moved.contains(shear.apply_point(p)) and moved.contains(shear.apply_point(q))
        assert shear.invert_line(moved) == line


def test_shear_for_points_separates_x(square):
    pts = square + [Point(1, 1), Point(1, 5)]
    shear = Shear.for_points(pts, seed=3)
    assert len({shear.apply_point(p).x for p in pts}) == len(pts)
    assert not shear.apply_line(Line.vertical(1)).is_vertical
    assert Shear.for_points(pts, seed=3) == shear
