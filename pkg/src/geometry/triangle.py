"""Marked ideal triangles and tick-mark shifts.

The standard triangle in the upper half-plane has ideal vertices ``0, 1, inf``,
the images of ``omega, omega^2, 1`` under the inverse Cayley-type map. Side
``i`` runs from vertex ``i`` to vertex ``i + 1`` and carries its tick at the
image of ``-(2 - sqrt 3) omega^i``.
"""

import math

from pydantic import BaseModel, ConfigDict, Field, field_validator
from scipy import integrate

from ..errors import DomainError
from ..graph.models import RotationGraph
from .mobius import INF, Mobius, chordal_distance, distance_to_geodesic, hyperbolic_distance

STANDARD_VERTICES: tuple[float, float, float] = (0.0, 1.0, INF)
STANDARD_TICKS: tuple[complex, complex, complex] = (0.5 + 0.5j, 1.0 + 1.0j, 1.0j)

# C_i maps the geodesic (0, inf) with tick i onto side i; C_{i+1} = ROTATE @ C_i
SIDE_FRAMES: tuple[Mobius, Mobius, Mobius] = (
    Mobius(a=1.0, b=0.0, c=1.0, d=1.0),
    Mobius(a=1.0, b=1.0, c=0.0, d=1.0),
    Mobius(a=0.0, b=-1.0, c=1.0, d=0.0),
)
ROTATE = Mobius(a=0.0, b=1.0, c=-1.0, d=1.0)


def shifted_tick(side: int, alpha: float) -> complex:
    """Tick of standard side ``side`` moved by ``alpha`` toward the side's end point."""
    return SIDE_FRAMES[side](1j * math.exp(alpha))


class MarkedIdealTriangle(BaseModel):
    """An ideal triangle with one tick-mark on each side."""

    model_config = ConfigDict(frozen=True)

    vertices: tuple[float, float, float]
    tick_marks: tuple[complex, complex, complex]
    placement: Mobius = Field(default_factory=Mobius.identity)

    def side(self, index: int) -> tuple[float, float]:
        return self.vertices[index], self.vertices[(index + 1) % 3]

    def tick_offsets(self) -> list[float]:
        """Distance of every tick from its side's geodesic."""
        return [
            distance_to_geodesic(tick, *self.side(i)) for i, tick in enumerate(self.tick_marks)
        ]

    def min_vertex_separation(self) -> float:
        return min(
            chordal_distance(self.vertices[i], self.vertices[(i + 1) % 3]) for i in range(3)
        )

    def normalizer(self, corner: int) -> Mobius:
        """Map sending vertices ``corner - 1, corner, corner + 1`` to ``1, inf, 0``."""
        source = (
            self.vertices[(corner - 1) % 3],
            self.vertices[corner],
            self.vertices[(corner + 1) % 3],
        )
        return Mobius.from_points(source, (1.0, INF, 0.0))


def standard_triangle() -> MarkedIdealTriangle:
    """The standard marked ideal triangle."""
    return MarkedIdealTriangle(vertices=STANDARD_VERTICES, tick_marks=STANDARD_TICKS)


def place_triangle(placement: Mobius, alphas: tuple[float, float, float]) -> MarkedIdealTriangle:
    """Image of the standard triangle under ``placement`` with ticks shifted by ``alphas``."""
    return MarkedIdealTriangle(
        vertices=tuple(placement(v) for v in STANDARD_VERTICES),  # type: ignore[arg-type]
        tick_marks=tuple(  # type: ignore[arg-type]
            placement(shifted_tick(i, alphas[i])) for i in range(3)
        ),
        placement=placement,
    )


def tick_distances(triangle: MarkedIdealTriangle) -> list[float]:
    """Pairwise hyperbolic distances between the three ticks."""
    t = triangle.tick_marks
    return [hyperbolic_distance(t[i], t[(i + 1) % 3]) for i in range(3)]


def horocyclic_segment_lengths(triangle: MarkedIdealTriangle) -> list[float]:
    """Length of the horocyclic segment at every ideal vertex.

    The segment at vertex ``k`` joins the two sides meeting there along the
    horocycle through the tick of the incoming side ``k - 1``.
    """
    lengths = []
    for corner in range(3):
        normalizer = triangle.normalizer(corner)
        height = normalizer(triangle.tick_marks[(corner - 1) % 3]).imag
        # The two sides are now the vertical lines x = 0 and x = 1
        lengths.append(1.0 / height)
    return lengths


def triangle_area(triangle: MarkedIdealTriangle) -> float:
    """Hyperbolic area by quadrature after moving the triangle to ``(1, inf, 0)``.

    The region is then ``0 < x < 1`` above the semicircle on ``[0, 1]``. With
    ``x = (1 - cos t) / 2`` the semicircle becomes ``y = sin(t) / 2``.
    """
    normalizer = triangle.normalizer(1)
    image = [normalizer(v) for v in triangle.vertices]
    if chordal_distance(image[0], 1.0) > 1e-8 or chordal_distance(image[2], 0.0) > 1e-8:
        raise DomainError("Triangle vertices are degenerate; cannot normalize")
    area, _ = integrate.dblquad(
        lambda y, t: 0.5 * math.sin(t) / y**2,
        0.0,
        math.pi,
        lambda t: 0.5 * math.sin(t),
        lambda t: INF,
        epsabs=1e-10,
        epsrel=1e-10,
    )
    return float(area)


class TickShifts(BaseModel):
    """Hyperbolic tick shift ``alpha`` per flag, keyed by dart id; missing flags are 0."""

    values: dict[int, float] = Field(default_factory=dict)

    @field_validator("values")
    @classmethod
    def _finite(cls, values: dict[int, float]) -> dict[int, float]:
        bad = sorted(d for d, value in values.items() if not math.isfinite(value))
        if bad:
            raise ValueError(f"tick shifts must be finite; darts {bad} are not")
        return values

    def __getitem__(self, dart: int) -> float:
        return self.values.get(dart, 0.0)

    def bumped(self, dart: int, amount: float) -> "TickShifts":
        values = dict(self.values)
        values[dart] = values.get(dart, 0.0) + amount
        return TickShifts(values=values)

    @classmethod
    def zero(cls) -> "TickShifts":
        return cls()

    @classmethod
    def from_triangles(
        cls, g: RotationGraph, shifts: dict[int, tuple[float, float, float]]
    ) -> "TickShifts":
        """Paste non-standard marked triangles given by their per-side shift triples."""
        values: dict[int, float] = {}
        for vertex, triple in shifts.items():
            for dart, alpha in zip(g.vertex_darts(vertex), triple, strict=True):
                values[dart] = alpha
        return cls(values=values)
