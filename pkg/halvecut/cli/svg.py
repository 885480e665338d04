"""Figure output. Drawing never feeds back into solving: everything here reads finished
instances and results only."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Optional, Sequence

from jinja2 import Environment, FileSystemLoader, select_autoescape

from halvecut.arrangement import build_arrangement, face_counts
from halvecut.core import config
from halvecut.core.instance import Instance
from halvecut.geom import HalfPlane, Line, Point, clip_polygon, line_intersection
from halvecut.geom.primitives import ONE

logger = logging.getLogger(__name__)

TEMPLATES_DIR = Path(__file__).parent / "templates"
TEMPLATE_NAME = "figure.svg.j2"
CANVAS = 640
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")

_env = Environment(
    loader=FileSystemLoader(TEMPLATES_DIR),
    autoescape=select_autoescape(["svg", "j2"]),
    trim_blocks=True,
    lstrip_blocks=True,
)


@dataclass(frozen=True)
class ViewBox:
    lo_x: Fraction
    lo_y: Fraction
    hi_x: Fraction
    hi_y: Fraction

    @classmethod
    def around(cls, points: Sequence[Point], margin: Fraction) -> ViewBox:
        """The points' bounding box scaled by margin about its center; never degenerate."""
        xs = [p.x for p in points]
        ys = [p.y for p in points]
        cx, cy = (min(xs) + max(xs)) / 2, (min(ys) + max(ys)) / 2
        half = max(max(xs) - min(xs), max(ys) - min(ys), ONE) * margin / 2
        return cls(cx - half, cy - half, cx + half, cy + half)

    def corners(self) -> list[Point]:
        return [
            Point(self.lo_x, self.lo_y),
            Point(self.hi_x, self.lo_y),
            Point(self.hi_x, self.hi_y),
            Point(self.lo_x, self.hi_y),
        ]

    def halfplanes(self) -> list[HalfPlane]:
        return [
            HalfPlane(Line.vertical(self.lo_x), 1, True),
            HalfPlane(Line.vertical(self.hi_x), -1, True),
            HalfPlane(Line.horizontal(self.lo_y), 1, True),
            HalfPlane(Line.horizontal(self.hi_y), -1, True),
        ]

    def contains(self, p: Point) -> bool:
        return self.lo_x <= p.x <= self.hi_x and self.lo_y <= p.y <= self.hi_y

    def to_canvas(self, p: Point) -> tuple[float, float]:
        scale = CANVAS / (self.hi_x - self.lo_x)
        return round(float((p.x - self.lo_x) * scale), 3), round(float((self.hi_y - p.y) * scale), 3)


def clip_line(line: Line, box: ViewBox) -> Optional[tuple[Point, Point]]:
    hits = []
    for corner_a, corner_b in zip(box.corners(), box.corners()[1:] + box.corners()[:1]):
        hit = line_intersection(line, Line.through(corner_a, corner_b))
        if isinstance(hit, Point) and box.contains(hit):
            hits.append(hit)
    if len(set(hits)) < 2:
        return None
    hits.sort(key=line.param)
    return hits[0], hits[-1]


def _shaded_faces(instance: Instance, lines: Sequence[Line], box: ViewBox) -> list[tuple[list[tuple[float, float]], float]]:
    """2-faces holding points, with opacity given by the worst count / limit over the sets."""
    arrangement = build_arrangement(lines)
    shaded = []
    for fid, row in face_counts(arrangement, instance).items():
        if fid.dim != 2:
            continue
        load = max(Fraction(count) / s.limit for count, s in zip(row, instance.sets))
        polygon = list(arrangement.faces[fid.index].polygon)
        for hp in box.halfplanes():
            polygon = clip_polygon(polygon, hp)
        if len(polygon) >= 3:
            shaded.append(([box.to_canvas(v) for v in polygon], round(float(min(load, ONE)) * 0.6, 3)))
    return shaded


def render_svg(
    instance: Instance,
    lines: Iterable[Line] = (),
    guards: Iterable[Point] = (),
    shade: bool = False,
    margin: Optional[Fraction] = None,
) -> str:
    lines = list(lines)
    guards = list(guards)
    box = ViewBox.around(instance.all_points + guards, margin if margin is not None else config.SVG_MARGIN)
    segments = []
    for line in lines:
        clipped = clip_line(line, box)
        if clipped is not None:
            segments.append((box.to_canvas(clipped[0]), box.to_canvas(clipped[1])))
    point_sets = [
        {"color": PALETTE[i % len(PALETTE)], "points": [box.to_canvas(p) for p in s.points]}
        for i, s in enumerate(instance.sets)
    ]
    return _env.get_template(TEMPLATE_NAME).render(
        size=CANVAS,
        faces=_shaded_faces(instance, lines, box) if shade and lines else [],
        segments=segments,
        point_sets=point_sets,
        guards=[box.to_canvas(g) for g in guards],
    )


def write_svg(path: Path, *args, **kwargs) -> None:
    """Best effort: a failed figure is logged and otherwise ignored."""
    try:
        Path(path).write_text(render_svg(*args, **kwargs), encoding="utf-8")
        logger.info(f"Figure written to {path}")
    except Exception as e:
        logger.warning(f"Could not write figure {path}: {e}", exc_info=True)
