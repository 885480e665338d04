"""Faces of a line arrangement recovered from point side vectors.

Every face of an arrangement is convex and is exactly one class of equal side vectors, so the
faces that hold instance points, and their per-set counts, follow from grouping the points.
No planar map is traced.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from halvecut.arrangement import OpenEdge, OpenFace, VertexRegion
from halvecut.arrangement.dcel import Region
from halvecut.core.instance import Instance
from halvecut.geom import HalfPlane, Line, Point, line_intersection


@dataclass(frozen=True)
class Cell:
    """The face with side vector ``signs``: the instance points inside it and how many of them
    each set owns."""

    signs: tuple[int, ...]
    members: tuple[Point, ...]
    counts: tuple[int, ...]

    @property
    def dim(self) -> int:
        return max(0, 2 - self.signs.count(0))


class PointSignatures:
    """Sides of every instance point with respect to lines, cached per line."""

    def __init__(self, instance: Instance, lines: Iterable[Line] = ()):
        self.instance = instance
        self.points: list[Point] = instance.all_points
        self._owners = instance.membership()
        self._position = {p: i for i, p in enumerate(self.points)}
        self._columns: dict[Line, tuple[int, ...]] = {}
        for line in lines:
            self.column(line)

    def column(self, line: Line) -> tuple[int, ...]:
        col = self._columns.get(line)
        if col is None:
            col = tuple(line.side(p) for p in self.points)
            self._columns[line] = col
        return col

    def sides(self, line: Line, points: Iterable[Point]) -> set[int]:
        column = self.column(line)
        return {column[self._position[p]] for p in points}

    def groups(self, lines: Iterable[Line]) -> dict[tuple[int, ...], list[Point]]:
        columns = [self.column(line) for line in lines]
        grouped: dict[tuple[int, ...], list[Point]] = defaultdict(list)
        for i, p in enumerate(self.points):
            grouped[tuple(col[i] for col in columns)].append(p)
        return grouped

    def cells(self, lines: Sequence[Line]) -> list[Cell]:
        """Non-empty faces of the arrangement of ``lines``, sorted by side vector."""
        cells = []
        for signs, members in sorted(self.groups(lines).items()):
            counts = [0] * self.instance.k
            for p in members:
                for i in self._owners[p]:
                    counts[i] += 1
            cells.append(Cell(signs, tuple(members), tuple(counts)))
        return cells

    def region(self, lines: Sequence[Line], cell: Cell) -> Region:
        """The open face, open edge or vertex of the arrangement that holds the cell."""
        if cell.dim == 2:
            return OpenFace(tuple(HalfPlane(line, s) for line, s in zip(lines, cell.signs)))
        if cell.dim == 0:
            return VertexRegion(cell.members[0])
        support = lines[cell.signs.index(0)]
        here = support.param(cell.members[0])
        start: Optional[Fraction] = None
        end: Optional[Fraction] = None
        for line in lines:
            hit = line_intersection(support, line)
            if not isinstance(hit, Point):
                continue
            t = support.param(hit)
            if t < here and (start is None or t > start):
                start = t
            elif t > here and (end is None or t < end):
                end = t
        return OpenEdge(support, start, end)

    def crosses(self, cell: Cell, candidate: Line, region: Region) -> bool:
        """Whether ``candidate`` meets the relative interior of the cell's region transversally.

        The cell's points settle most candidates: one on the candidate, or two on opposite
        sides, put a crossing inside the convex region.
        """
        if isinstance(region, VertexRegion):
            return False
        if isinstance(region, OpenEdge) and candidate == region.line:
            return False
        sides = self.sides(candidate, cell.members)
        if 0 in sides or len(sides) > 1:
            return True
        return region.crosses(candidate)
