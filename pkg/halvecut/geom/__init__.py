from .duality import Shear, dual_line, dual_point
from .hull import convex_hull, cross_tangents
from .primitives import (
    COINCIDENT,
    PARALLEL,
    Coincident,
    HalfPlane,
    Line,
    Parallel,
    Point,
    Polygon,
    Segment,
    as_rational,
    centroid,
    clip_polygon,
    line_intersection,
    line_meets_halfplanes,
    orient,
    polygon_area,
    polygons_intersect,
    segment_intersection,
    sign,
)

__all__ = [
    "COINCIDENT",
    "PARALLEL",
    "Coincident",
    "HalfPlane",
    "Line",
    "Parallel",
    "Point",
    "Polygon",
    "Segment",
    "Shear",
    "as_rational",
    "centroid",
    "clip_polygon",
    "convex_hull",
    "cross_tangents",
    "dual_line",
    "dual_point",
    "line_intersection",
    "line_meets_halfplanes",
    "orient",
    "polygon_area",
    "polygons_intersect",
    "segment_intersection",
    "sign",
]
