from .dcel import (
    BOX,
    Arrangement,
    Edge,
    Face,
    FaceId,
    OpenEdge,
    OpenFace,
    VertexRegion,
    build_arrangement,
)
from .decompose import Trapezoid, vertical_decompose
from .queries import (
    FaceComplexityProfile,
    complexity_profile,
    crossing_weight,
    face_counts,
    zone_weights,
)

__all__ = [
    "BOX",
    "Arrangement",
    "Edge",
    "Face",
    "FaceComplexityProfile",
    "FaceId",
    "OpenEdge",
    "OpenFace",
    "Trapezoid",
    "VertexRegion",
    "build_arrangement",
    "complexity_profile",
    "crossing_weight",
    "face_counts",
    "vertical_decompose",
    "zone_weights",
]
