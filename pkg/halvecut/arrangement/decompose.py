from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import pairwise
from typing import Optional, Sequence

from halvecut.core.errors import GeometryError
from halvecut.geom import HalfPlane, Line, Point, clip_polygon, line_meets_halfplanes, sign
from halvecut.geom.primitives import ONE, ZERO

from .dcel import Arrangement, FaceId


@dataclass(frozen=True)
class Trapezoid:
    """Vertical trapezoid: the part of the slab left_x < x < right_x above floor and below
    ceiling. A missing bound means the trapezoid is unbounded in that direction."""

    floor: Optional[Line]
    ceiling: Optional[Line]
    left_x: Optional[Fraction]
    right_x: Optional[Fraction]

    def halfplanes(self, closed: bool = True) -> list[HalfPlane]:
        planes = []
        if self.left_x is not None:
            planes.append(HalfPlane(Line.vertical(self.left_x), 1, closed))
        if self.right_x is not None:
            planes.append(HalfPlane(Line.vertical(self.right_x), -1, closed))
        if self.floor is not None:
            planes.append(HalfPlane(self.floor, sign(self.floor.b), closed))
        if self.ceiling is not None:
            planes.append(HalfPlane(self.ceiling, -sign(self.ceiling.b), closed))
        return planes

    @property
    def bounded(self) -> bool:
        return None not in (self.floor, self.ceiling, self.left_x, self.right_x)

    def contains(self, p: Point, closed: bool = True) -> bool:
        return all(h.contains(p) for h in self.halfplanes(closed))

    def crosses(self, line: Line, closed: bool = True) -> bool:
        return line_meets_halfplanes(line, self.halfplanes(closed))

    def clipped(self, box: Sequence[Point]) -> list[Point]:
        """The trapezoid intersected with a convex box polygon."""
        polygon = list(box)
        for plane in self.halfplanes():
            polygon = clip_polygon(polygon, plane)
        return polygon


def _sample_x(left: Optional[Fraction], right: Optional[Fraction]) -> Fraction:
    if left is not None and right is not None:
        return (left + right) / 2
    if left is not None:
        return left + ONE
    if right is not None:
        return right - ONE
    return ZERO


def vertical_decompose(arrangement: Arrangement, fid: FaceId) -> list[Trapezoid]:
    """Splits a 2-face by vertical walls through its vertices (and along its vertical sides)."""
    if fid.dim != 2:
        raise GeometryError(f"Only 2-faces can be decomposed, got {fid}")
    face = arrangement.face(fid.index)
    lines = arrangement.lines

    walls = {v.x for v in face.vertices}
    walls.update(lines[j].c / lines[j].a for j, _ in face.boundary if lines[j].is_vertical)
    xs = sorted(walls)

    slabs: list[tuple[Optional[Fraction], Optional[Fraction]]] = []
    if not xs:
        slabs.append((None, None))
    else:
        # The clipped polygon reaches past the outermost walls only when the face is unbounded there.
        if min(p.x for p in face.polygon) < xs[0]:
            slabs.append((None, xs[0]))
        slabs.extend(pairwise(xs))
        if max(p.x for p in face.polygon) > xs[-1]:
            slabs.append((xs[-1], None))

    pieces = []
    for left, right in slabs:
        x = _sample_x(left, right)
        floor = ceiling = None
        floor_y: Optional[Fraction] = None
        ceiling_y: Optional[Fraction] = None
        for j, side in face.boundary:
            line = lines[j]
            if line.is_vertical:
                continue
            y = line.y_at(x)
            if side * sign(line.b) > 0:
                if floor_y is None or y > floor_y:
                    floor, floor_y = line, y
            elif ceiling_y is None or y < ceiling_y:
                ceiling, ceiling_y = line, y
        pieces.append(Trapezoid(floor, ceiling, left, right))
    return pieces
