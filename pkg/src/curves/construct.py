"""Obstruction curves around a cusp and their total geodesic curvature.

A closed curve around the puncture of ``D*`` bounds a region ``V`` containing
it, and Gauss-Bonnet with curvature -1 gives ``total kappa_g = area(V)``. A
negatively curved fill-in of the metric inside the curve needs more than
``2 pi`` of total curvature; the constructions here produce curves where this
holds and yet the maximum principle forbids an extension.
"""

import math

import numpy as np
from scipy import integrate, optimize

from ..config import get_config
from ..errors import InternalConsistencyError, PreconditionError
from ..geometry.mobius import hyperbolic_distance
from ..metrics.profiles import DStarProfile, horoball_area, u_dstar
from ..utils import LoggingConfig
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
)

logger = LoggingConfig.get_logger("src.curves.construct")

_DSTAR = DStarProfile()

# Geodesic length of the no-extension curve and of each horocyclic extension.
NO_EXTENSION_GEODESIC = 3 * math.pi
NO_EXTENSION_HOROCYCLE = math.pi


def total_geodesic_curvature(c: CuspCurve) -> float:
    """Closed-form ``sum kappa_g * length`` over the pieces plus the corner angles.

    By Gauss-Bonnet this is the area of the region around the cusp.
    """
    smooth = sum(piece.geodesic_curvature() * piece.hyperbolic_length() for piece in c.pieces)
    return smooth + sum(c.corner_angles())


def _curvature_density(piece: CurvePiece, t: float) -> float:
    # kappa_g ds = (y k_E + cos psi) |dz| / y
    z, v, a = piece.point(t), piece.velocity(t), piece.acceleration(t)
    speed = abs(v)
    euclidean = (v.conjugate() * a).imag / speed**3
    return euclidean * speed + v.real / z.imag


def gauss_bonnet_total(c: CuspCurve) -> float:
    """Integrate ``kappa_g`` along every piece numerically and add the turning angles."""
    tol = get_config().tolerances.quadrature
    total = 0.0
    for piece in c.pieces:
        value, _ = integrate.quad(
            lambda t, p=piece: _curvature_density(p, t), 0.0, 1.0, epsabs=tol * 1e-4
        )
        total += value
    return total + sum(c.corner_angles())


def quotient_distance(p: complex, q: complex, period: float, copies: int = 2) -> float:
    """Distance between ``p`` and ``q`` in ``H / (z -> z + period)``."""
    return min(hyperbolic_distance(p, q + k * period) for k in range(-copies, copies + 1))


def slit_parameters(
    r2: float, u_gap: float = 0.1, area_excess: float = 0.5
) -> tuple[float, float]:
    """``R1`` with ``u(R1) = u(R2) + u_gap`` and ``theta`` with area ``2 pi + area_excess``.

    Raises:
        PreconditionError: if ``R2`` is not in ``(1/e, 1)`` or no such ``theta`` exists.
    """
    if not 1 / math.e < r2 < 1:
        raise PreconditionError(f"R2 must satisfy 1/e < R2 < 1; got R2={r2}")
    if not u_gap > 0:
        raise PreconditionError(f"u_gap must be positive; got u_gap={u_gap}")
    target = u_dstar(r2) + u_gap
    floor = 1e-12
    if u_dstar(floor) <= target:
        raise PreconditionError(f"u_D* never reaches {target:.6g} on (0, 1/e)")

    r1 = optimize.brentq(
        lambda r: u_dstar(r) - target,
        floor,
        1 / math.e,
        xtol=get_config().numerics.root_tol,
    )
    l1, l2 = -math.log(r1), -math.log(r2)
    theta = (2 * math.pi + area_excess - 2 * math.pi / l2) / (2 * (1 / l1 - 1 / l2))
    if not 0 < theta < math.pi:
        raise PreconditionError(
            f"Area 2*pi + {area_excess} is out of reach for R1={r1:.6g}, R2={r2}; "
            f"it needs 0 < theta < pi, got theta={theta:.6g}"
        )
    return float(r1), float(theta)


def slit_horocycle(
    r1: float, r2: float, theta: float
) -> tuple[CuspCurve, ObstructionCertificate]:
    """The ``R2`` horocycle with the sector ``|arg z| < theta`` pushed in to ``R1``.

    Raises:
        PreconditionError: naming the failed inequality among
            ``0 < R1 < 1/e < R2 < 1`` and ``0 < theta < pi``.
    """
    if not 0 < r1:
        raise PreconditionError(f"R1 must be positive; got R1={r1}")
    if not r1 < 1 / math.e:
        raise PreconditionError(f"R1 must be below 1/e (u_D* decreasing there); got R1={r1}")
    if not 1 / math.e < r2:
        raise PreconditionError(f"R2 must exceed 1/e; got R2={r2}")
    if not r2 < 1:
        raise PreconditionError(f"R2 must be below 1; got R2={r2}")
    if not 0 < theta < math.pi:
        raise PreconditionError(f"theta must satisfy 0 < theta < pi; got theta={theta}")

    inner = -math.log(r1) / (2 * math.pi)
    outer = -math.log(r2) / (2 * math.pi)
    edge = theta / (2 * math.pi)
    curve = CuspCurve(
        pieces=[
            HorocyclicSegment(height=outer, x0=-0.5, x1=-edge),
            VerticalSegment(x=-edge, y0=outer, y1=inner),
            HorocyclicSegment(height=inner, x0=-edge, x1=edge),
            VerticalSegment(x=edge, y0=inner, y1=outer),
            HorocyclicSegment(height=outer, x0=edge, x1=0.5),
        ]
    )

    # u_D* along the radial slits passes through its minimum at 1/e, so the max is at an end.
    u_inner, u_outer = u_dstar(r1), u_dstar(r2)
    if u_inner >= u_outer:
        radius, height, x = r1, inner, 0.0
    else:
        radius, height, x = r2, outer, 0.5
    u_max = max(u_inner, u_outer)
    normal_derivative = math.exp(u_max) * float(_DSTAR.du(radius))
    area = total_geodesic_curvature(curve)
    total = gauss_bonnet_total(curve)

    certificate = ObstructionCertificate(
        max_point=complex(to_punctured_disk(np.array([complex(x, height)]))[0]),
        max_radius=radius,
        u_at_max=u_max,
        normal_derivative=normal_derivative,
        total_curvature=total,
        enclosed_area=area,
        certified=u_inner > u_outer and area > 2 * math.pi and normal_derivative < 0,
    )
    logger.info(
        "Built slit horocycle",
        r1=r1,
        r2=r2,
        theta=theta,
        area=area,
        certified=certificate.certified,
    )
    return curve, certificate


def _convex_gap(theta: np.ndarray) -> np.ndarray:
    cos = np.cos(theta)
    lhs = math.pi / (math.pi + np.tan(theta) - theta)
    rhs = -cos * np.log(cos) / (1 - cos)
    return lhs - rhs


def _convex_margins(y: float, theta: float) -> tuple[float, float]:
    curvature = 1 / y - 2 * math.tan(theta) + 2 * theta - 2 * math.pi
    radius = y / math.cos(theta)
    u = u_dstar(math.exp(-2 * math.pi * radius)) - u_dstar(math.exp(-2 * math.pi * y))
    return curvature, u


def convex_curve(y: float, theta: float) -> CuspCurve:
    """Horocycle at height ``y`` closed up by a geodesic arc meeting it at angle ``theta``."""
    half = y * math.tan(theta)
    if not 2 * half < 1:
        raise PreconditionError(
            f"The arc must fit in one period (2 y tan(theta) < 1); got y={y}, theta={theta}"
        )
    return CuspCurve(
        pieces=[
            GeodesicArc(
                center=0.0,
                radius=y / math.cos(theta),
                phi0=math.pi / 2 + theta,
                phi1=math.pi / 2 - theta,
            ),
            HorocyclicSegment(height=y, x0=half, x1=1 - half),
        ]
    )


def convex_counterexample() -> tuple[float, float, CuspCurve, ConvexCertificate]:
    """A convex curve with total curvature above ``2 pi`` admitting no fill-in.

    Scans ``(0, pi/2)`` for the widest margin of the angle inequality, fixes
    ``y`` by equality in the total-curvature condition, then lowers ``theta``
    through ``theta0 * k / 20`` and keeps the choice with the largest worst
    margin.

    Raises:
        InternalConsistencyError: if no admissible angle or margin is found.
    """
    numerics = get_config().numerics
    scan = np.linspace(0.0, math.pi / 2, numerics.scan_size + 2)[1:-1]
    gaps = _convex_gap(scan)
    best = int(np.argmax(gaps))
    if not gaps[best] > 0:
        raise InternalConsistencyError("Angle inequality fails on the whole scan of (0, pi/2)")
    theta0 = float(scan[best])
    y = 1 / (2 * math.pi + 2 * math.tan(theta0) - 2 * theta0)
    logger.debug("Scanned convex angle", theta0=theta0, gap=float(gaps[best]), y=y)

    candidates = [theta0 * k / 20 for k in range(1, 20)]
    theta = max(candidates, key=lambda t: min(_convex_margins(y, t)))
    curvature_margin, u_margin = _convex_margins(y, theta)
    if min(curvature_margin, u_margin) < 1e-6:
        raise InternalConsistencyError(
            f"Convex counterexample margins too small: curvature {curvature_margin:.3g}, "
            f"u {u_margin:.3g}"
        )

    curve = convex_curve(y, theta)
    piece_curvatures = [piece.geodesic_curvature() for piece in curve.pieces]
    total = total_geodesic_curvature(curve)
    certificate = ConvexCertificate(
        y=y,
        theta=theta,
        x=(1 - 2 * y * math.tan(theta)) / 2,
        arc_radius=y / math.cos(theta),
        total_curvature=total,
        curvature_margin=curvature_margin,
        u_margin=u_margin,
        piece_curvatures=piece_curvatures,
        certified=total > 2 * math.pi and u_margin > 0 and min(piece_curvatures) >= 0,
    )
    logger.info("Built convex counterexample", y=y, theta=theta, total_curvature=total)
    return y, theta, curve, certificate


def _is_symmetric(curve: CuspCurve, tol: float = 1e-9) -> bool:
    points = curve.sample(101)
    mirrored = np.array(curve.reflected(n=101))
    separation = np.abs(mirrored[:, None] - points[None, :]).min(axis=1)
    return bool(separation.max() < tol)


def geodesic_horocycle_curve() -> tuple[CuspCurve, NoExtensionReport]:
    """Geodesic segment of length ``3 pi`` on the unit circle, extended by two horocyclic
    segments of length ``pi``, closed up in ``H / (z -> z + C)``."""
    s = NO_EXTENSION_GEODESIC / 2
    height = 1 / math.cosh(s)
    foot = math.tanh(s)
    width = NO_EXTENSION_HOROCYCLE * height
    beta = math.asin(height)
    period = 2 * foot + 2 * width

    curve = CuspCurve(
        pieces=[
            HorocyclicSegment(height=height, x0=-foot - width, x1=-foot),
            GeodesicArc(center=0.0, radius=1.0, phi0=math.pi - beta, phi1=beta),
            HorocyclicSegment(height=height, x0=foot, x1=foot + width),
        ],
        period=period,
    )
    arc = curve.pieces[1]
    total = total_geodesic_curvature(curve)
    distance = quotient_distance(arc.start, arc.end, period)
    report = NoExtensionReport(
        period=period,
        geodesic_length=arc.hyperbolic_length(),
        horocycle_length=curve.pieces[0].hyperbolic_length(),
        total_curvature=total,
        quotient_distance=distance,
        endpoint_height=height,
        symmetric=_is_symmetric(curve),
        curvature_exceeds_2pi=total > 2 * math.pi,
        shortcut_exists=distance < NO_EXTENSION_GEODESIC,
    )
    logger.info(
        "Built geodesic-horocycle curve",
        period=period,
        total_curvature=total,
        quotient_distance=distance,
    )
    return curve, report


def horocycle(r: float) -> CuspCurve:
    """The circle ``|z| = r`` as a single horocyclic piece."""
    horoball_area(r)  # domain check
    return CuspCurve(
        pieces=[HorocyclicSegment(height=-math.log(r) / (2 * math.pi), x0=-0.5, x1=0.5)]
    )
