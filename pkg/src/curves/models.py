"""Piecewise-analytic closed curves around a cusp.

Curves live in the upper half-plane modulo ``z -> z + period``; the cusp sits
at ``i inf`` and the region containing it lies above the curve, on its left.
``z -> exp(2 pi i z / period)`` maps the picture to the punctured disk, where
the complete metric becomes ``|dz| / (|z| log(1/|z|))`` for period 1.
"""

import cmath
import math
from typing import Annotated, Literal

import numpy as np
from pydantic import BaseModel, Field, PlainSerializer, computed_field, model_validator

ComplexPoint = Annotated[complex, PlainSerializer(lambda z: [z.real, z.imag], return_type=list)]


class _Piece(BaseModel):
    """Common interface: a smooth arc parametrized over ``t in [0, 1]``."""

    def point(self, t: float) -> complex:
        raise NotImplementedError

    def velocity(self, t: float) -> complex:
        raise NotImplementedError

    def acceleration(self, t: float) -> complex:
        raise NotImplementedError

    @property
    def start(self) -> complex:
        return self.point(0.0)

    @property
    def end(self) -> complex:
        return self.point(1.0)

    def tangent(self, t: float) -> complex:
        v = self.velocity(t)
        return v / abs(v)

    def sample(self, n: int = 200) -> np.ndarray:
        return np.array([self.point(t) for t in np.linspace(0.0, 1.0, n)])


class HorocyclicSegment(_Piece):
    """Horizontal segment ``y = height`` from ``x0`` to ``x1``; ``kappa_g = +1`` going right."""

    kind: Literal["horocycle"] = "horocycle"
    height: float = Field(..., gt=0)
    x0: float
    x1: float

    def point(self, t: float) -> complex:
        return complex(self.x0 + t * (self.x1 - self.x0), self.height)

    def velocity(self, t: float) -> complex:
        return complex(self.x1 - self.x0, 0.0)

    def acceleration(self, t: float) -> complex:
        return 0j

    def hyperbolic_length(self) -> float:
        return abs(self.x1 - self.x0) / self.height

    def geodesic_curvature(self) -> float:
        return math.copysign(1.0, self.x1 - self.x0)

    def area_contribution(self) -> float:
        return (self.x1 - self.x0) / self.height


class VerticalSegment(_Piece):
    """Vertical geodesic segment at abscissa ``x`` from height ``y0`` to ``y1``."""

    kind: Literal["vertical"] = "vertical"
    x: float
    y0: float = Field(..., gt=0)
    y1: float = Field(..., gt=0)

    def point(self, t: float) -> complex:
        return complex(self.x, self.y0 + t * (self.y1 - self.y0))

    def velocity(self, t: float) -> complex:
        return complex(0.0, self.y1 - self.y0)

    def acceleration(self, t: float) -> complex:
        return 0j

    def hyperbolic_length(self) -> float:
        return abs(math.log(self.y1 / self.y0))

    def geodesic_curvature(self) -> float:
        return 0.0

    def area_contribution(self) -> float:
        return 0.0


class GeodesicArc(_Piece):
    """Arc of the geodesic circle ``center + radius exp(i phi)`` from ``phi0`` to ``phi1``."""

    kind: Literal["arc"] = "arc"
    center: float
    radius: float = Field(..., gt=0)
    phi0: float
    phi1: float

    @model_validator(mode="after")
    def _in_upper_half_plane(self) -> "GeodesicArc":
        for phi in (self.phi0, self.phi1):
            if not 0 < phi < math.pi:
                raise ValueError(f"arc angle {phi} leaves the upper half-plane")
        return self

    def _phi(self, t: float) -> float:
        return self.phi0 + t * (self.phi1 - self.phi0)

    def point(self, t: float) -> complex:
        return self.center + self.radius * cmath.exp(1j * self._phi(t))

    def velocity(self, t: float) -> complex:
        return 1j * (self.phi1 - self.phi0) * self.radius * cmath.exp(1j * self._phi(t))

    def acceleration(self, t: float) -> complex:
        return -((self.phi1 - self.phi0) ** 2) * self.radius * cmath.exp(1j * self._phi(t))

    def hyperbolic_length(self) -> float:
        def log_tan_half(phi: float) -> float:
            return math.log(math.tan(phi / 2))

        return abs(log_tan_half(self.phi1) - log_tan_half(self.phi0))

    def geodesic_curvature(self) -> float:
        return 0.0

    def area_contribution(self) -> float:
        # dx / y = -d(phi) along the circle
        return self.phi0 - self.phi1


CurvePiece = Annotated[
    HorocyclicSegment | VerticalSegment | GeodesicArc, Field(discriminator="kind")
]


def turning_angle(incoming: complex, outgoing: complex) -> float:
    """Signed exterior angle from one unit tangent to the next (left turns positive)."""
    return cmath.phase(outgoing / incoming)


class CuspCurve(BaseModel):
    """A closed curve around the cusp, as a chain of pieces closed up by the period."""

    pieces: list[CurvePiece]
    period: float = Field(1.0, gt=0)

    @model_validator(mode="after")
    def _closed(self) -> "CuspCurve":
        if not self.pieces:
            raise ValueError("a curve needs at least one piece")
        ends = [piece.end for piece in self.pieces]
        starts = [piece.start for piece in self.pieces[1:]] + [self.pieces[0].start + self.period]
        for index, (end, start) in enumerate(zip(ends, starts, strict=True)):
            if abs(end - start) > 1e-9 * max(1.0, abs(start)):
                raise ValueError(f"piece {index} ends at {end}, next piece starts at {start}")
        return self

    @computed_field  # type: ignore[prop-decorator]
    @property
    def enclosed_area(self) -> float:
        """Hyperbolic area of the cusp region above the curve, by ``area = integral dx / y``."""
        return sum(piece.area_contribution() for piece in self.pieces)

    def corner_angles(self) -> list[float]:
        """Turning angle at the end of every piece, the last one closing the curve."""
        angles = []
        for index, piece in enumerate(self.pieces):
            following = self.pieces[(index + 1) % len(self.pieces)]
            angles.append(turning_angle(piece.tangent(1.0), following.tangent(0.0)))
        return angles

    def sample(self, n: int = 200) -> np.ndarray:
        return np.concatenate([piece.sample(n) for piece in self.pieces])

    def reflected(self, axis: float = 0.0, n: int = 200) -> list[complex]:
        """Sample points reflected across the vertical line ``x = axis``."""
        return [complex(2 * axis - z.real, z.imag) for z in self.sample(n)]


def to_punctured_disk(points: np.ndarray, period: float = 1.0) -> np.ndarray:
    """Map half-plane points to the punctured disk by ``exp(2 pi i z / period)``."""
    return np.exp(2j * np.pi * np.asarray(points) / period)


class ObstructionCertificate(BaseModel):
    """Maximum-principle witness: where the metric density peaks on the curve and how it leaves."""

    max_point: ComplexPoint = Field(..., description="Point of the curve in the punctured disk")
    max_radius: float
    u_at_max: float
    normal_derivative: float = Field(..., description="Outward normal derivative of exp(u)")
    total_curvature: float
    enclosed_area: float
    certified: bool


class ConvexCertificate(BaseModel):
    """Parameters and margins of the convex counterexample."""

    y: float
    theta: float
    x: float
    arc_radius: float
    total_curvature: float
    curvature_margin: float
    u_margin: float
    piece_curvatures: list[float]
    certified: bool


class NoExtensionReport(BaseModel):
    """Measurements of the geodesic-plus-horocycle curve."""

    period: float
    geodesic_length: float
    horocycle_length: float
    total_curvature: float
    quotient_distance: float
    endpoint_height: float
    symmetric: bool
    curvature_exceeds_2pi: bool
    shortcut_exists: bool
