from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional, Sequence, Union

from halvecut.core.errors import GeometryError

RationalLike = Union[int, Fraction, str]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_rational(value: RationalLike) -> Fraction:
    """Converts ints, Fractions and strings like '3/4' to Fraction; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise GeometryError(f"Expected an exact rational, got {value!r}")
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise GeometryError(f"Expected an exact rational, got {value!r}") from e


def sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


@dataclass(frozen=True, order=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", as_rational(self.x))
        object.__setattr__(self, "y", as_rational(self.y))

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def scaled(self, factor: Fraction) -> Point:
        return Point(self.x * factor, self.y * factor)

    def __repr__(self) -> str:
        return f"Point({self.x}, {self.y})"


def cross(u: Point, v: Point) -> Fraction:
    return u.x * v.y - u.y * v.x


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of (q - p) x (r - p): +1 left turn, -1 right turn, 0 collinear."""
    return sign((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x))


def centroid(points: Sequence[Point]) -> Point:
    n = len(points)
    return Point(sum((p.x for p in points), ZERO) / n, sum((p.y for p in points), ZERO) / n)


@dataclass(frozen=True, order=True)
class Line:
    """The locus a*x + b*y = c, stored in canonical integer form.

    The coefficients are scaled to coprime integers with the first nonzero of (a, b)
    positive, so equal lines compare (and hash) equal.
    """

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self) -> None:
        a, b, c = (as_rational(v) for v in (self.a, self.b, self.c))
        if a == 0 and b == 0:
            raise GeometryError("Degenerate line: a and b are both zero")
        den = lcm(a.denominator, b.denominator, c.denominator)
        ia, ib, ic = (int(v * den) for v in (a, b, c))
        g = gcd(ia, ib, ic)
        ia, ib, ic = ia // g, ib // g, ic // g
        if ia < 0 or (ia == 0 and ib < 0):
            ia, ib, ic = -ia, -ib, -ic
        object.__setattr__(self, "a", Fraction(ia))
        object.__setattr__(self, "b", Fraction(ib))
        object.__setattr__(self, "c", Fraction(ic))

    @classmethod
    def through(cls, p: Point, q: Point) -> Line:
        if p == q:
            raise GeometryError(f"Cannot build a line through a single point {p}")
        a = q.y - p.y
        b = p.x - q.x
        return cls(a, b, a * p.x + b * p.y)

    @classmethod
    def from_slope(cls, slope: RationalLike, intercept: RationalLike) -> Line:
        """y = slope*x + intercept."""
        return cls(-as_rational(slope), ONE, as_rational(intercept))

    @classmethod
    def vertical(cls, x: RationalLike) -> Line:
        return cls(ONE, ZERO, as_rational(x))

    @classmethod
    def horizontal(cls, y: RationalLike) -> Line:
        return cls(ZERO, ONE, as_rational(y))

    @property
    def is_vertical(self) -> bool:
        return self.b == 0

    @property
    def slope(self) -> Fraction:
        if self.is_vertical:
            raise GeometryError(f"Vertical line {self} has no slope")
        return -self.a / self.b

    @property
    def intercept(self) -> Fraction:
        if self.is_vertical:
            raise GeometryError(f"Vertical line {self} has no intercept")
        return self.c / self.b

    def value(self, p: Point) -> Fraction:
        return self.a * p.x + self.b * p.y - self.c

    def side(self, p: Point) -> int:
        return sign(self.value(p))

    def contains(self, p: Point) -> bool:
        return self.value(p) == 0

    def y_at(self, x: Fraction) -> Fraction:
        return (self.c - self.a * x) / self.b

    def param(self, p: Point) -> Fraction:
        """Position of a point of the line along it: x for non-vertical lines, y otherwise."""
        return p.y if self.is_vertical else p.x

    def point_at(self, t: Fraction) -> Point:
        if self.is_vertical:
            return Point(self.c / self.a, t)
        return Point(t, self.y_at(t))

    def __repr__(self) -> str:
        return f"Line({self.a}x + {self.b}y = {self.c})"


@dataclass(frozen=True)
class Parallel:
    pass


@dataclass(frozen=True)
class Coincident:
    pass


PARALLEL = Parallel()
COINCIDENT = Coincident()


def line_intersection(l1: Line, l2: Line) -> Union[Point, Parallel, Coincident]:
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        return COINCIDENT if l1 == l2 else PARALLEL
    x = (l1.c * l2.b - l2.c * l1.b) / det
    y = (l1.a * l2.c - l2.a * l1.c) / det
    return Point(x, y)


@dataclass(frozen=True)
class Segment:
    p: Point
    q: Point

    def __post_init__(self) -> None:
        if self.p == self.q:
            raise GeometryError(f"Segment endpoints must differ, got {self.p} twice")

    @property
    def line(self) -> Line:
        return Line.through(self.p, self.q)

    def contains(self, r: Point) -> bool:
        """Closed segment membership."""
        if orient(self.p, self.q, r) != 0:
            return False
        return (min(self.p.x, self.q.x) <= r.x <= max(self.p.x, self.q.x)
                and min(self.p.y, self.q.y) <= r.y <= max(self.p.y, self.q.y))


def segment_intersection(s1: Segment, s2: Segment) -> Optional[Point]:
    """The crossing point when the two segments cross properly (interiors meet in one point)."""
    o1 = orient(s1.p, s1.q, s2.p)
    o2 = orient(s1.p, s1.q, s2.q)
    o3 = orient(s2.p, s2.q, s1.p)
    o4 = orient(s2.p, s2.q, s1.q)
    if o1 * o2 < 0 and o3 * o4 < 0:
        hit = line_intersection(s1.line, s2.line)
        if isinstance(hit, Point):
            return hit
    return None


def segments_touch(s1: Segment, s2: Segment) -> bool:
    """Closed segments share at least one point."""
    o1 = orient(s1.p, s1.q, s2.p)
    o2 = orient(s1.p, s1.q, s2.q)
    o3 = orient(s2.p, s2.q, s1.p)
    o4 = orient(s2.p, s2.q, s1.q)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return s1.contains(s2.p) or s1.contains(s2.q) or s2.contains(s1.p) or s2.contains(s1.q)


@dataclass(frozen=True)
class HalfPlane:
    """side * (a*x + b*y - c) > 0, or >= 0 when closed."""

    line: Line
    side: int
    closed: bool = False

    def contains(self, p: Point) -> bool:
        s = self.line.side(p) * self.side
        return s >= 0 if self.closed else s > 0


def line_meets_halfplanes(line: Line, halfplanes: Iterable[HalfPlane]) -> bool:
    """Whether the line has a point inside every half-plane (a 1-d feasibility check)."""
    if line.is_vertical:
        origin = Point(line.c / line.a, ZERO)
        dx, dy = ZERO, ONE
    else:
        origin = Point(ZERO, line.c / line.b)
        dx, dy = ONE, line.slope
    lo: Optional[Fraction] = None
    lo_strict = False
    hi: Optional[Fraction] = None
    hi_strict = False
    for hp in halfplanes:
        u = hp.side * hp.line.value(origin)
        s = hp.side * (hp.line.a * dx + hp.line.b * dy)
        strict = not hp.closed
        if s == 0:
            if u < 0 or (u == 0 and strict):
                return False
            continue
        bound = -u / s
        if s > 0:
            if lo is None or bound > lo or (bound == lo and strict):
                lo, lo_strict = bound, strict
        else:
            if hi is None or bound < hi or (bound == hi and strict):
                hi, hi_strict = bound, strict
    if lo is None or hi is None:
        return True
    if lo < hi:
        return True
    return lo == hi and not lo_strict and not hi_strict


def clip_polygon(vertices: Sequence[Point], halfplane: HalfPlane) -> list[Point]:
    """Sutherland-Hodgman clip of a convex polygon against the closure of a half-plane."""
    if not vertices:
        return []
    result: list[Point] = []
    n = len(vertices)
    for i in range(n):
        cur = vertices[i]
        nxt = vertices[(i + 1) % n]
        s_cur = halfplane.line.side(cur) * halfplane.side
        s_nxt = halfplane.line.side(nxt) * halfplane.side
        if s_cur >= 0:
            result.append(cur)
        if s_cur * s_nxt < 0:
            hit = line_intersection(halfplane.line, Line.through(cur, nxt))
            if isinstance(hit, Point):
                result.append(hit)
    deduped: list[Point] = []
    for p in result:
        if not deduped or deduped[-1] != p:
            deduped.append(p)
    if len(deduped) > 1 and deduped[0] == deduped[-1]:
        deduped.pop()
    return deduped


def polygon_area(vertices: Sequence[Point]) -> Fraction:
    """Signed shoelace area; positive for counterclockwise order."""
    n = len(vertices)
    if n < 3:
        return ZERO
    twice = sum((cross(vertices[i], vertices[(i + 1) % n]) for i in range(n)), ZERO)
    return twice / 2


@dataclass(frozen=True)
class Polygon:
    """Convex polygon, counterclockwise, strictly convex. One or two vertices mean a
    degenerate polygon (a point or a segment)."""

    vertices: tuple[Point, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if not self.vertices:
            raise GeometryError("Polygon needs at least one vertex")

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def is_degenerate(self) -> bool:
        return len(self.vertices) < 3

    def edges(self) -> list[Segment]:
        n = len(self.vertices)
        if n == 1:
            return []
        if n == 2:
            return [Segment(*self.vertices)]
        return [Segment(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def contains(self, p: Point) -> bool:
        """Closed containment."""
        n = len(self.vertices)
        if n == 1:
            return p == self.vertices[0]
        if n == 2:
            return Segment(*self.vertices).contains(p)
        return all(orient(self.vertices[i], self.vertices[(i + 1) % n], p) >= 0 for i in range(n))

    def halfplanes(self, closed: bool = True) -> list[HalfPlane]:
        n = len(self.vertices)
        if n < 3:
            raise GeometryError("Degenerate polygons have no half-plane description")
        planes = []
        for i in range(n):
            p, q = self.vertices[i], self.vertices[(i + 1) % n]
            line = Line.through(p, q)
            inside = self.vertices[(i + 2) % n]
            planes.append(HalfPlane(line, line.side(inside), closed))
        return planes

    @property
    def area(self) -> Fraction:
        return polygon_area(self.vertices)


def polygons_intersect(first: Polygon, second: Polygon) -> bool:
    """Closed convex polygons share a point."""
    if any(second.contains(v) for v in first.vertices):
        return True
    if any(first.contains(v) for v in second.vertices):
        return True
    return any(segments_touch(e, f) for e in first.edges() for f in second.edges())
