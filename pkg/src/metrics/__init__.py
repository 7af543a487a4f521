"""Radial conformal metrics on the disk and the punctured disk."""

from .control import (
    ComparisonReport,
    ComparisonVerdict,
    ControlledMetric,
    ControlledProfile,
    ControlResult,
    compare_metrics,
    comparison_sandwich,
    curvature_control_profile,
    curvature_from_g,
    g_disk,
    g_disk_prime,
    g_dstar,
    g_dstar_prime,
)
from .extension import (
    ExtendedProfile,
    ExtensionReport,
    certify_extension,
    extend_metric,
    sharpness_certificate,
)
from .profiles import (
    CurvatureReport,
    DiskProfile,
    DStarProfile,
    RadialProfile,
    ShiftedProfile,
    boundary_geodesic_curvature,
    curvature_report,
    curvature_values,
    default_grid,
    finite_difference_curvature,
    horoball_area,
    radial_curvature,
    u_dstar,
)

__all__ = [
    "ComparisonReport",
    "ComparisonVerdict",
    "ControlResult",
    "ControlledMetric",
    "ControlledProfile",
    "CurvatureReport",
    "DStarProfile",
    "DiskProfile",
    "ExtendedProfile",
    "ExtensionReport",
    "RadialProfile",
    "ShiftedProfile",
    "boundary_geodesic_curvature",
    "certify_extension",
    "compare_metrics",
    "comparison_sandwich",
    "curvature_control_profile",
    "curvature_from_g",
    "curvature_report",
    "curvature_values",
    "default_grid",
    "extend_metric",
    "finite_difference_curvature",
    "g_disk",
    "g_disk_prime",
    "g_dstar",
    "g_dstar_prime",
    "horoball_area",
    "radial_curvature",
    "sharpness_certificate",
    "u_dstar",
]
