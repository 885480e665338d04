from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from halvecut.core.errors import CorridorError
from halvecut.corridor import Corridor, caratheodory_triple, combine, contains_line, contains_point
from halvecut.geom import Line, Point

flat_and_diagonal = Corridor((Line.horizontal(0), Line.from_slope(1, 0)))


def test_point_membership_is_closed():
    assert contains_point(flat_and_diagonal, Point(1, Fraction(1, 2)))
    assert contains_point(flat_and_diagonal, Point(-1, Fraction(-1, 2)))
    assert contains_point(flat_and_diagonal, Point(1, 1))
    assert not flat_and_diagonal.strictly_contains(Point(1, 1))
    assert not contains_point(flat_and_diagonal, Point(1, 2))


@given(st.integers(-30, 30), st.integers(-30, 30))
def test_dual_and_envelope_membership_agree(x, y):
    corridor = Corridor((Line.from_slope(1, 0), Line.from_slope(-1, 2), Line.from_slope(0, -3)))
    p = Point(x, y)
    heights = [g.y_at(p.x) for g in corridor.generators]
    assert corridor.contains_point(p) == (min(heights) <= p.y <= max(heights))


def test_contains_line():
    assert contains_line(flat_and_diagonal, Line.from_slope(Fraction(1, 2), 0))
    assert not contains_line(flat_and_diagonal, Line.from_slope(Fraction(1, 2), 1))
    with pytest.raises(CorridorError):
        contains_line(flat_and_diagonal, Line.vertical(0))


def test_vertical_generators_are_rejected():
    with pytest.raises(CorridorError):
        Corridor((Line.vertical(1),))
    with pytest.raises(CorridorError):
        Corridor(())


def test_combine_requires_a_convex_combination():
    lines = [Line.from_slope(0, 0), Line.from_slope(2, 2)]
    assert combine(lines, [Fraction(1, 2), Fraction(1, 2)]) == Line.from_slope(1, 1)
    with pytest.raises(CorridorError):
        combine(lines, [1, 1])
    with pytest.raises(CorridorError):
        combine(lines, [Fraction(3, 2), Fraction(-1, 2)])


def test_caratheodory_on_a_generator_returns_it():
    g = Line.from_slope(1, 0)
    assert caratheodory_triple(flat_and_diagonal, g) == [g]


def test_caratheodory_rejects_outside_lines():
    with pytest.raises(CorridorError):
        caratheodory_triple(flat_and_diagonal, Line.from_slope(5, 5))


generator_sets = st.lists(
    st.builds(Line.from_slope, st.integers(-9, 9), st.integers(-9, 9)), min_size=1, max_size=8, unique=True
)


@settings(max_examples=300)
@given(generator_sets, st.data())
def test_caratheodory_triple_keeps_the_line_inside(generators, data):
    chosen = data.draw(st.lists(st.sampled_from(generators), min_size=1, max_size=4))
    raw = data.draw(st.lists(st.integers(1, 9), min_size=len(chosen), max_size=len(chosen)))
    coeffs = [Fraction(w, sum(raw)) for w in raw]
    g = combine(chosen, coeffs)

    corridor = Corridor(tuple(generators))
    assert corridor.contains_line(g)
    triple = corridor.caratheodory_triple(g)
    assert 1 <= len(triple) <= 3
    assert set(triple) <= set(corridor.generators)
    assert Corridor(tuple(triple)).contains_line(g)
