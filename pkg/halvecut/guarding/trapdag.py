"""Largest guard-free convex polygon over a point set, as a longest path in a DAG of vertical
trapezoids.

A convex polygon with x-distinct vertices splits, by vertical lines through its vertices, into
trapezoids whose floor and ceiling are edges of its lower and upper chains. Nodes are all such
trapezoids spanned by point pairs; an edge joins two trapezoids sharing a wall where exactly one
chain bends convexly. Each node counts the points in its half-open slab [left, right), so a
start-to-final path counts every point of the polygon except its rightmost vertex.
"""

from __future__ import annotations

import logging
from bisect import bisect_right
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Hashable, Iterable, Optional, Sequence

import networkx as nx

from halvecut.core import config
from halvecut.core.errors import GeometryError
from halvecut.geom import Line, Point, Polygon, Segment, convex_hull, orient

logger = logging.getLogger(__name__)

Seg = tuple[Point, Point]  # left endpoint first


@dataclass(frozen=True)
class TrapNode:
    floor: Seg
    ceiling: Seg
    left: Fraction
    right: Fraction
    weight: int

    @property
    def is_start(self) -> bool:
        return self.floor[0] == self.ceiling[0]

    @property
    def is_final(self) -> bool:
        return self.floor[1] == self.ceiling[1]

    def contains(self, p: Point) -> bool:
        """Closed containment."""
        return (
            self.left <= p.x <= self.right
            and orient(*self.floor, p) >= 0
            and orient(*self.ceiling, p) <= 0
        )


def _slope(p: Point, q: Point) -> Fraction:
    return (q.y - p.y) / (q.x - p.x)


def require_x_distinct(points: Sequence[Point]) -> None:
    if len({p.x for p in points}) != len(points):
        raise GeometryError("Trapezoid DAG needs points with pairwise distinct x-coordinates")


@lru_cache(maxsize=64)
def base_trapezoids(points: tuple[Point, ...]) -> tuple[TrapNode, ...]:
    """Every admissible (floor, ceiling) trapezoid over pairs of the given points, unfiltered by
    guards. ``points`` must be sorted, distinct and x-distinct."""
    segments: list[Seg] = list(combinations(points, 2))
    lines = {s: Line.through(*s) for s in segments}
    nodes = []
    for floor in segments:
        for ceiling in segments:
            if floor == ceiling:
                continue
            left = max(floor[0].x, ceiling[0].x)
            right = min(floor[1].x, ceiling[1].x)
            if left >= right:
                continue
            gap_left = lines[ceiling].y_at(left) - lines[floor].y_at(left)
            gap_right = lines[ceiling].y_at(right) - lines[floor].y_at(right)
            if gap_left < 0 or gap_right < 0:
                continue
            # Floor and ceiling may only touch at the polygon's extreme vertices.
            if gap_left == 0 and floor[0] != ceiling[0]:
                continue
            if gap_right == 0 and floor[1] != ceiling[1]:
                continue
            weight = sum(
                1 for p in points
                if left <= p.x < right and orient(*floor, p) >= 0 and orient(*ceiling, p) <= 0
            )
            nodes.append(TrapNode(floor, ceiling, left, right, weight))
    return tuple(nodes)


def build_trap_dag(points: Iterable[Point], guards: Iterable[Point] = (), chained: Optional[bool] = None) -> nx.DiGraph:
    """The DAG over guard-free trapezoids.

    With ``chained`` (the default from config), the successors of a trapezoid are reached through
    a slope-ordered chain of entrance nodes shared by all trapezoids bending at the same vertex,
    which keeps the edge count at one per trapezoid plus one per entrance. Without it every
    compatible pair gets its own edge.
    """
    pts = tuple(sorted(set(points)))
    require_x_distinct(pts)
    chained = config.CHAINED_DAG if chained is None else chained
    guards = list(guards)
    traps = [t for t in base_trapezoids(pts) if not any(t.contains(w) for w in guards)]

    graph = nx.DiGraph()
    for t in traps:
        graph.add_node(t, weight=t.weight, start=t.is_start, final=t.is_final)

    # (kind, bend vertex, unchanged segment) -> [(chain key, successor)] in chain order
    options: dict[tuple[str, Point, Seg], list[tuple[Fraction, TrapNode]]] = defaultdict(list)
    for t in traps:
        options[("floor", t.floor[0], t.ceiling)].append((_slope(*t.floor), t))
        # Ceiling chains run by decreasing slope; negate to keep keys ascending.
        options[("ceiling", t.ceiling[0], t.floor)].append((-_slope(*t.ceiling), t))
    for chain in options.values():
        chain.sort(key=lambda item: item[0])
    keys = {key: [k for k, _ in chain] for key, chain in options.items()}

    def entrance(key: tuple[str, Point, Seg], i: int) -> Hashable:
        return ("entry", key, i)

    if chained:
        for key, chain in options.items():
            for i, (_, succ) in enumerate(chain):
                graph.add_node(entrance(key, i), weight=0, start=False, final=False)
                graph.add_edge(entrance(key, i), succ)
                if i:
                    graph.add_edge(entrance(key, i - 1), entrance(key, i))

    for t in traps:
        (p, v), (c, d) = t.floor, t.ceiling
        if v.x < d.x:
            key = ("floor", v, t.ceiling)
            threshold = _slope(p, v)  # the lower chain must turn left at v
        elif d.x < v.x:
            key = ("ceiling", d, t.floor)
            threshold = -_slope(c, d)  # the upper chain must turn right at d
        else:
            continue
        if key not in options:
            continue
        first = bisect_right(keys[key], threshold)
        if first >= len(options[key]):
            continue
        if chained:
            graph.add_edge(t, entrance(key, first))
        else:
            for _, succ in options[key][first:]:
                graph.add_edge(t, succ)
    return graph


class TrapDag:
    """Index form of a trapezoid DAG in topological order.

    Built once per point set over every trapezoid; a guard blocks the trapezoids containing it,
    which removes exactly the nodes a guard-filtered build would drop. Entrance chains stay, so
    the remaining successors of every node are unchanged.
    """

    def __init__(self, graph: nx.DiGraph):
        order = list(nx.topological_sort(graph))
        index = {node: i for i, node in enumerate(order)}
        self.traps: list[Optional[TrapNode]] = [n if isinstance(n, TrapNode) else None for n in order]
        self.weights = [graph.nodes[n]["weight"] for n in order]
        self.starts = [graph.nodes[n]["start"] for n in order]
        self.finals = [graph.nodes[n]["final"] for n in order]
        self.preds = [[index[u] for u in graph.predecessors(n)] for n in order]
        self._blocked: dict[Point, frozenset[int]] = {}

    def __len__(self) -> int:
        return len(self.traps)

    def blocked_by(self, guard: Point) -> frozenset[int]:
        hit = self._blocked.get(guard)
        if hit is None:
            hit = frozenset(i for i, t in enumerate(self.traps) if t is not None and t.contains(guard))
            self._blocked[guard] = hit
        return hit

    def longest_path(self, guards: Iterable[Point] = ()) -> tuple[int, list[TrapNode]]:
        """Heaviest start-to-final path avoiding the guards. (-1, []) without one."""
        blocked: set[int] = set()
        for guard in guards:
            blocked |= self.blocked_by(guard)
        best: list[Optional[int]] = [None] * len(self.traps)
        parent = [-1] * len(self.traps)
        for i, preds in enumerate(self.preds):
            if i in blocked:
                continue
            top, via = None, -1
            for u in preds:
                value = best[u]
                if value is not None and (top is None or value > top):
                    top, via = value, u
            if top is not None:
                best[i], parent[i] = top + self.weights[i], via
            elif self.starts[i]:
                best[i] = self.weights[i]

        ends = [i for i, final in enumerate(self.finals) if final and best[i] is not None]
        if not ends:
            return -1, []
        end = max(ends, key=lambda i: best[i])
        path = []
        i = end
        while i != -1:
            trap = self.traps[i]
            if trap is not None:
                path.append(trap)
            i = parent[i]
        path.reverse()
        return best[end], path


@lru_cache(maxsize=64)
def trap_dag(points: tuple[Point, ...], chained: bool) -> TrapDag:
    """The unguarded DAG of sorted, distinct, x-distinct points."""
    dag = TrapDag(build_trap_dag(points, (), chained))
    logger.debug(f"Trapezoid DAG over {len(points)} points: {len(dag)} nodes")
    return dag


def longest_path(graph: nx.DiGraph) -> tuple[int, list[TrapNode]]:
    """Heaviest start-to-final path. Returns (weight, trapezoids), or (-1, []) without one."""
    return TrapDag(graph).longest_path()


def path_polygon(path: Sequence[TrapNode]) -> Polygon:
    return convex_hull({p for t in path for p in (*t.floor, *t.ceiling)})


@lru_cache(maxsize=64)
def _segments(points: tuple[Point, ...]) -> tuple[tuple[Segment, int], ...]:
    """Every segment between two of the points with the number of points on it."""
    found = []
    for a, b in combinations(points, 2):
        segment = Segment(a, b)
        found.append((segment, sum(1 for p in points if segment.contains(p))))
    return tuple(found)


def max_empty_convex(
    points: Iterable[Point], guards: Iterable[Point] = (), chained: Optional[bool] = None
) -> tuple[int, Optional[Polygon]]:
    """Largest |P ∩ pg| over closed convex polygons pg spanned by P that avoid every guard,
    including single points and segments. (0, None) when every point is guarded."""
    pts = tuple(sorted(set(points)))
    require_x_distinct(pts)
    chained = config.CHAINED_DAG if chained is None else chained
    guards = list(dict.fromkeys(guards))
    guarded = set(guards)

    count, polygon = 0, None
    free = next((p for p in pts if p not in guarded), None)
    if free is not None:
        count, polygon = 1, Polygon((free,))
    for segment, on in _segments(pts):
        if on <= count or segment.p in guarded or segment.q in guarded:
            continue
        if any(segment.contains(w) for w in guards):
            continue
        count, polygon = on, Polygon((segment.p, segment.q))

    weight, path = trap_dag(pts, chained).longest_path(guards)
    if path and weight + 1 > count:
        count, polygon = weight + 1, path_polygon(path)
    return count, polygon


def find_bad_polygon(points: Iterable[Point], threshold: int, guards: Iterable[Point] = ()) -> Optional[Polygon]:
    """A guard-free convex polygon holding at least ``threshold`` points, or None."""
    if threshold < 1:
        raise GeometryError(f"threshold must be at least 1, got {threshold}")
    count, polygon = max_empty_convex(points, guards)
    return polygon if count >= threshold else None
