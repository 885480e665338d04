from __future__ import annotations

import logging
from bisect import bisect_left
from collections import defaultdict, deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from itertools import pairwise
from typing import Iterable, NamedTuple, Optional, Sequence, Union

from halvecut.core.errors import GeometryError
from halvecut.geom import (
    HalfPlane,
    Line,
    Point,
    centroid,
    line_intersection,
    line_meets_halfplanes,
    polygon_area,
)
from halvecut.geom.primitives import ONE, ZERO, cross

logger = logging.getLogger(__name__)

BOX = -1  # side tag of bounding-box edges


class FaceId(NamedTuple):
    dim: int
    index: int


@dataclass(frozen=True)
class Edge:
    """A relatively open piece of one line between consecutive vertices; None marks a ray end."""

    line_index: int
    start: Optional[Point]
    end: Optional[Point]


@dataclass(frozen=True)
class Face:
    index: int
    polygon: tuple[Point, ...]  # clipped to the bounding box, counterclockwise
    sides: tuple[int, ...]  # line index of each polygon edge, BOX for box edges
    vertices: tuple[Point, ...]  # arrangement vertices on the boundary
    mask: int  # bit j set iff the face is on the positive side of line j
    boundary: tuple[tuple[int, int], ...]  # (line index, side)

    @property
    def complexity(self) -> int:
        return sum(1 for s in self.sides if s != BOX)

    @property
    def bounded(self) -> bool:
        return BOX not in self.sides


@dataclass(frozen=True)
class OpenFace:
    halfplanes: tuple[HalfPlane, ...]

    def crosses(self, line: Line) -> bool:
        return line_meets_halfplanes(line, self.halfplanes)

    def contains(self, p: Point) -> bool:
        return all(h.contains(p) for h in self.halfplanes)


@dataclass(frozen=True)
class OpenEdge:
    line: Line
    start: Optional[Fraction]
    end: Optional[Fraction]

    def _inside(self, t: Fraction) -> bool:
        return (self.start is None or t > self.start) and (self.end is None or t < self.end)

    def crosses(self, other: Line) -> bool:
        """Transversal crossing only; the supporting line contains the edge instead."""
        if other == self.line:
            return False
        hit = line_intersection(self.line, other)
        return isinstance(hit, Point) and self._inside(self.line.param(hit))

    def contains(self, p: Point) -> bool:
        return self.line.contains(p) and self._inside(self.line.param(p))


@dataclass(frozen=True)
class VertexRegion:
    point: Point

    def crosses(self, line: Line) -> bool:
        return False

    def contains(self, p: Point) -> bool:
        return p == self.point


Region = Union[OpenFace, OpenEdge, VertexRegion]


class Arrangement:
    """Arrangement of a finite set of lines, with faces of dimension 0, 1 and 2.

    2-faces are traced on the planar graph obtained by clipping every line to a box [-M, M]^2
    that strictly contains all vertices and crosses every line; unbounded faces keep their
    box edges tagged BOX.
    """

    def __init__(
        self,
        lines: Sequence[Line],
        vertices: Sequence[Point],
        vertex_lines: Sequence[tuple[int, ...]],
        line_vertices: Sequence[Sequence[int]],
        faces: Sequence[Face],
        box: Fraction,
    ):
        self.lines: tuple[Line, ...] = tuple(lines)
        self.vertices: tuple[Point, ...] = tuple(vertices)
        self.vertex_lines = tuple(vertex_lines)
        self.faces: tuple[Face, ...] = tuple(faces)
        self.box = box
        self._line_index = {line: j for j, line in enumerate(self.lines)}
        self._vertex_index = {p: i for i, p in enumerate(self.vertices)}
        self._face_by_mask = {face.mask: face.index for face in self.faces}

        self._line_params: list[list[Fraction]] = []
        edges: list[Edge] = []
        offsets: list[int] = []
        for j, line in enumerate(self.lines):
            pts = [self.vertices[v] for v in line_vertices[j]]
            self._line_params.append([line.param(p) for p in pts])
            offsets.append(len(edges))
            bounds: list[Optional[Point]] = [None, *pts, None]
            edges.extend(Edge(j, a, b) for a, b in pairwise(bounds))
        self.edges: tuple[Edge, ...] = tuple(edges)
        self._edge_offsets = offsets

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    def euler_characteristic(self) -> int:
        return self.num_vertices - self.num_edges + self.num_faces

    def face(self, index: int) -> Face:
        return self.faces[index]

    def face_ids(self, dim: Optional[int] = None) -> list[FaceId]:
        ids: list[FaceId] = []
        if dim in (None, 0):
            ids.extend(FaceId(0, i) for i in range(self.num_vertices))
        if dim in (None, 1):
            ids.extend(FaceId(1, i) for i in range(self.num_edges))
        if dim in (None, 2):
            ids.extend(FaceId(2, i) for i in range(self.num_faces))
        return ids

    def index_of(self, line: Line) -> Optional[int]:
        return self._line_index.get(line)

    def halfplanes(self, index: int) -> tuple[HalfPlane, ...]:
        face = self.faces[index]
        return tuple(HalfPlane(self.lines[j], side) for j, side in face.boundary)

    def sign_mask(self, p: Point) -> int:
        mask = 0
        for j, line in enumerate(self.lines):
            if line.value(p) > 0:
                mask |= 1 << j
        return mask

    def locate(self, p: Point) -> FaceId:
        values = [line.value(p) for line in self.lines]
        zeros = [j for j, v in enumerate(values) if v == 0]
        if len(zeros) >= 2:
            return FaceId(0, self._vertex_index[p])
        if len(zeros) == 1:
            j = zeros[0]
            position = bisect_left(self._line_params[j], self.lines[j].param(p))
            return FaceId(1, self._edge_offsets[j] + position)
        mask = 0
        for j, v in enumerate(values):
            if v > 0:
                mask |= 1 << j
        return FaceId(2, self._face_by_mask[mask])

    def region(self, fid: FaceId) -> Region:
        if fid.dim == 2:
            return OpenFace(self.halfplanes(fid.index))
        if fid.dim == 1:
            edge = self.edges[fid.index]
            line = self.lines[edge.line_index]
            return OpenEdge(
                line,
                line.param(edge.start) if edge.start is not None else None,
                line.param(edge.end) if edge.end is not None else None,
            )
        if fid.dim == 0:
            return VertexRegion(self.vertices[fid.index])
        raise GeometryError(f"Unknown face dimension {fid.dim}")

    def interior_point(self, fid: FaceId) -> Point:
        if fid.dim == 2:
            return centroid(self.faces[fid.index].polygon)
        if fid.dim == 1:
            edge = self.edges[fid.index]
            line = self.lines[edge.line_index]
            if edge.start is not None and edge.end is not None:
                return centroid([edge.start, edge.end])
            if edge.start is not None:
                return line.point_at(line.param(edge.start) + ONE)
            if edge.end is not None:
                return line.point_at(line.param(edge.end) - ONE)
            return line.point_at(ZERO)
        return self.vertices[fid.index]

    def zone(self, line: Line) -> list[tuple[int, Optional[Fraction], Optional[Fraction]]]:
        """The 2-faces a foreign line passes through, with the open parameter interval of the
        line inside each face. Lines of the arrangement cross no open face."""
        if line in self._line_index:
            return []
        crossings: dict[Fraction, list[int]] = {}
        for j, other in enumerate(self.lines):
            hit = line_intersection(line, other)
            if isinstance(hit, Point):
                crossings.setdefault(line.param(hit), []).append(j)
        params = sorted(crossings)
        if not params:
            return [(self._face_by_mask[self.sign_mask(line.point_at(ZERO))], None, None)]
        mask = self.sign_mask(line.point_at(params[0] - ONE))
        pieces = [(self._face_by_mask[mask], None, params[0])]
        for i, t in enumerate(params):
            for j in crossings[t]:
                mask ^= 1 << j
            upper = params[i + 1] if i + 1 < len(params) else None
            pieces.append((self._face_by_mask[mask], t, upper))
        return pieces

    def box_polygon(self) -> list[Point]:
        m = self.box
        return [Point(-m, -m), Point(m, -m), Point(m, m), Point(-m, m)]


def _box_size(lines: Sequence[Line], vertices: Iterable[Point]) -> Fraction:
    bound = ONE
    for v in vertices:
        bound = max(bound, abs(v.x), abs(v.y))
    for line in lines:
        intercept = line.c / line.a if line.is_vertical else line.c / line.b
        bound = max(bound, abs(intercept))
    return bound + ONE


def _box_sides(m: Fraction) -> list[Line]:
    return [Line.horizontal(-m), Line.vertical(m), Line.horizontal(m), Line.vertical(-m)]


def _box_crossings(line: Line, m: Fraction, sides: Sequence[Line]) -> list[Point]:
    ends = set()
    for side in sides:
        hit = line_intersection(line, side)
        if isinstance(hit, Point) and -m <= hit.x <= m and -m <= hit.y <= m:
            ends.add(hit)
    if len(ends) != 2:
        raise GeometryError(f"{line} does not cross the bounding box at two points")
    return sorted(ends, key=line.param)


def _half(d: Point) -> int:
    return 0 if d.y > 0 or (d.y == 0 and d.x > 0) else 1


def _compare_directions(origin: Point, q1: Point, q2: Point) -> int:
    d1, d2 = q1 - origin, q2 - origin
    h1, h2 = _half(d1), _half(d2)
    if h1 != h2:
        return h1 - h2
    turn = cross(d1, d2)
    return -1 if turn > 0 else (1 if turn < 0 else 0)


def _mask_of(lines: Sequence[Line], p: Point) -> int:
    mask = 0
    for j, line in enumerate(lines):
        if line.value(p) > 0:
            mask |= 1 << j
    return mask


def _trace_faces(
    lines: Sequence[Line],
    vertices: Sequence[Point],
    line_vertices: Sequence[Sequence[int]],
    m: Fraction,
) -> list[Face]:
    sides = _box_sides(m)
    corners = [Point(-m, -m), Point(m, -m), Point(m, m), Point(-m, m)]
    adjacency: dict[Point, dict[Point, int]] = defaultdict(dict)

    def link(p: Point, q: Point, tag: int) -> None:
        adjacency[p][q] = tag
        adjacency[q][p] = tag

    side_points = [{c for c in corners if side.contains(c)} for side in sides]
    for j, line in enumerate(lines):
        first, last = _box_crossings(line, m, sides)
        chain = [first, *(vertices[v] for v in line_vertices[j]), last]
        for a, b in pairwise(chain):
            link(a, b, j)
        for end in (first, last):
            for s, side in enumerate(sides):
                if side.contains(end):
                    side_points[s].add(end)
    for s, side in enumerate(sides):
        for a, b in pairwise(sorted(side_points[s], key=side.param)):
            link(a, b, BOX)

    rotation: dict[Point, list[Point]] = {}
    position: dict[Point, dict[Point, int]] = {}
    for p, neighbours in adjacency.items():
        ordered = sorted(neighbours, key=cmp_to_key(lambda q1, q2, p=p: _compare_directions(p, q1, q2)))
        rotation[p] = ordered
        position[p] = {q: i for i, q in enumerate(ordered)}

    vertex_set = set(vertices)
    visited: set[tuple[Point, Point]] = set()
    cycles: list[tuple[list[Point], list[int]]] = []
    for u in sorted(adjacency):
        for v in rotation[u]:
            if (u, v) in visited:
                continue
            cycle: list[Point] = []
            tags: list[int] = []
            a, b = u, v
            while (a, b) not in visited:
                visited.add((a, b))
                cycle.append(a)
                tags.append(adjacency[a][b])
                around = rotation[b]
                a, b = b, around[position[b][a] - 1]
            if polygon_area(cycle) <= 0:
                continue  # the unbounded outside of the box
            cycles.append((cycle, tags))

    owner: dict[tuple[Point, Point], int] = {}
    for index, (cycle, _) in enumerate(cycles):
        for i, p in enumerate(cycle):
            owner[(p, cycle[(i + 1) % len(cycle)])] = index

    masks: list[Optional[int]] = [None] * len(cycles)
    masks[0] = _mask_of(lines, centroid(cycles[0][0]))
    queue = deque([0])
    while queue:
        f = queue.popleft()
        cycle, tags = cycles[f]
        for i, tag in enumerate(tags):
            if tag == BOX:
                continue
            twin = owner.get((cycle[(i + 1) % len(cycle)], cycle[i]))
            if twin is not None and masks[twin] is None:
                masks[twin] = masks[f] ^ (1 << tag)
                queue.append(twin)

    faces = []
    for index, (cycle, tags) in enumerate(cycles):
        mask = masks[index]
        if mask is None:
            raise GeometryError(f"Face {index} is not connected to the rest of the arrangement")
        boundary = tuple((j, 1 if (mask >> j) & 1 else -1) for j in sorted(set(tags) - {BOX}))
        faces.append(Face(
            index=index,
            polygon=tuple(cycle),
            sides=tuple(tags),
            vertices=tuple(p for p in cycle if p in vertex_set),
            mask=mask,
            boundary=boundary,
        ))
    return faces


def build_arrangement(lines: Iterable[Line]) -> Arrangement:
    unique = list(dict.fromkeys(lines))
    n = len(unique)
    vertex_index: dict[Point, int] = {}
    vertices: list[Point] = []
    through: list[set[int]] = []
    on_line: list[set[int]] = [set() for _ in unique]
    for i in range(n):
        for j in range(i + 1, n):
            hit = line_intersection(unique[i], unique[j])
            if not isinstance(hit, Point):
                continue
            vid = vertex_index.get(hit)
            if vid is None:
                vid = len(vertices)
                vertex_index[hit] = vid
                vertices.append(hit)
                through.append(set())
            through[vid].update((i, j))
            on_line[i].add(vid)
            on_line[j].add(vid)

    line_vertices = [
        sorted(on_line[j], key=lambda v, line=unique[j]: line.param(vertices[v])) for j in range(n)
    ]
    box = _box_size(unique, vertices)
    faces = _trace_faces(unique, vertices, line_vertices, box)
    arrangement = Arrangement(
        unique, vertices, [tuple(sorted(t)) for t in through], line_vertices, faces, box
    )
    logger.debug(
        f"Built arrangement of {n} lines: V={arrangement.num_vertices}, "
        f"E={arrangement.num_edges}, F={arrangement.num_faces}"
    )
    return arrangement
