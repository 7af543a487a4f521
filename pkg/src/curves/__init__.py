"""Closed curves around a cusp and the obstructions to extending its metric."""

from .construct import (
    convex_counterexample,
    convex_curve,
    gauss_bonnet_total,
    geodesic_horocycle_curve,
    horocycle,
    quotient_distance,
    slit_horocycle,
    slit_parameters,
    total_geodesic_curvature,
)
from .models import (
    ConvexCertificate,
    CurvePiece,
    CuspCurve,
    GeodesicArc,
    HorocyclicSegment,
    NoExtensionReport,
    ObstructionCertificate,
    VerticalSegment,
    to_punctured_disk,
    turning_angle,
)

__all__ = [
    "ConvexCertificate",
    "CurvePiece",
    "CuspCurve",
    "GeodesicArc",
    "HorocyclicSegment",
    "NoExtensionReport",
    "ObstructionCertificate",
    "VerticalSegment",
    "convex_counterexample",
    "convex_curve",
    "gauss_bonnet_total",
    "geodesic_horocycle_curve",
    "horocycle",
    "quotient_distance",
    "slit_horocycle",
    "slit_parameters",
    "to_punctured_disk",
    "total_geodesic_curvature",
    "turning_angle",
]
