"""Hyperbolic geometry: Möbius maps, marked ideal triangles and fundamental polygons."""

from .mobius import (
    INF,
    Mobius,
    chordal_distance,
    disk_from_half_plane,
    distance_to_geodesic,
    half_plane_from_disk,
    hyperbolic_distance,
)
from .polygon import (
    CycleTransform,
    FundamentalPolygon,
    assemble_polygon,
    check_shift_condition,
    cusp_sizes,
    large_cusps,
    parabolicity_residuals,
    vertex_cycle_transforms,
)
from .triangle import (
    MarkedIdealTriangle,
    TickShifts,
    horocyclic_segment_lengths,
    place_triangle,
    standard_triangle,
    tick_distances,
    triangle_area,
)

__all__ = [
    "INF",
    "CycleTransform",
    "FundamentalPolygon",
    "MarkedIdealTriangle",
    "Mobius",
    "TickShifts",
    "assemble_polygon",
    "check_shift_condition",
    "chordal_distance",
    "cusp_sizes",
    "disk_from_half_plane",
    "distance_to_geodesic",
    "half_plane_from_disk",
    "horocyclic_segment_lengths",
    "hyperbolic_distance",
    "large_cusps",
    "parabolicity_residuals",
    "place_triangle",
    "standard_triangle",
    "tick_distances",
    "triangle_area",
    "vertex_cycle_transforms",
]
