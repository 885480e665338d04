"""Hypothesis strategies for exact rational geometry."""

from fractions import Fraction

from hypothesis import strategies as st

from halvecut.geom import Line, Point

small_ints = st.integers(min_value=-20, max_value=20)
rationals = st.builds(Fraction, st.integers(-60, 60), st.integers(1, 7))
points = st.builds(Point, rationals, rationals)
integer_points = st.builds(Point, small_ints, small_ints)


@st.composite
def lines(draw, allow_vertical: bool = True) -> Line:
    a = draw(small_ints)
    b = draw(small_ints if allow_vertical else small_ints.filter(bool))
    if a == 0 and b == 0:
        b = 1
    return Line(a, b, draw(small_ints))


non_vertical_lines = lines(allow_vertical=False)
small_line_sets = st.lists(
    st.builds(Line.from_slope, st.integers(-4, 4), st.integers(-4, 4)), min_size=1, max_size=7, unique=True
)


@st.composite
def x_distinct_points(draw, min_size: int = 1, max_size: int = 8) -> list[Point]:
    xs = draw(st.lists(st.integers(-12, 12), min_size=min_size, max_size=max_size, unique=True))
    return [Point(x, draw(st.integers(-12, 12))) for x in xs]
