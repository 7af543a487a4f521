"""Möbius transformations of the upper half-plane as normalized real 2x2 matrices.

Boundary points are real floats with ``math.inf`` standing for the point at
infinity; interior points are complex numbers with positive imaginary part.
"""

import cmath
import math
from typing import overload

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..errors import DomainError

INF = math.inf

BoundaryPoint = float
Point = complex | float


def is_infinite(z: Point) -> bool:
    return isinstance(z, float) and math.isinf(z) or isinstance(z, complex) and cmath.isinf(z)


def chordal_distance(z: Point, w: Point) -> float:
    """Distance on the Riemann sphere; handles the point at infinity."""
    if is_infinite(z) and is_infinite(w):
        return 0.0
    if is_infinite(z):
        return 1.0 / math.sqrt(1.0 + abs(w) ** 2)
    if is_infinite(w):
        return 1.0 / math.sqrt(1.0 + abs(z) ** 2)
    return abs(z - w) / math.sqrt((1.0 + abs(z) ** 2) * (1.0 + abs(w) ** 2))


class Mobius(BaseModel):
    """``z -> (a z + b) / (c z + d)`` with ``ad - bc = 1``."""

    model_config = ConfigDict(frozen=True)

    a: float
    b: float
    c: float
    d: float

    @classmethod
    def identity(cls) -> "Mobius":
        return cls(a=1.0, b=0.0, c=0.0, d=1.0)

    @classmethod
    def from_matrix(cls, matrix: np.ndarray | list[list[float]]) -> "Mobius":
        """Normalize a real matrix with positive determinant to determinant 1."""
        m = np.asarray(matrix, dtype=float)
        det = float(np.linalg.det(m))
        if not det > 0:
            raise DomainError(f"Matrix has determinant {det}; not orientation-preserving")
        m = m / math.sqrt(det)
        return cls(a=m[0, 0], b=m[0, 1], c=m[1, 0], d=m[1, 1])

    @classmethod
    def _to_zero_one_inf(cls, z1: float, z2: float, z3: float) -> np.ndarray:
        if math.isinf(z1):
            return np.array([[0.0, z3 - z2], [-1.0, z3]])
        if math.isinf(z2):
            return np.array([[1.0, -z1], [1.0, -z3]])
        if math.isinf(z3):
            return np.array([[-1.0, z1], [0.0, z1 - z2]])
        return np.array([[z2 - z3, -z1 * (z2 - z3)], [z2 - z1, -z3 * (z2 - z1)]])

    @classmethod
    def from_points(
        cls,
        source: tuple[float, float, float],
        target: tuple[float, float, float],
    ) -> "Mobius":
        """The map sending three boundary points to three boundary points.

        Raises:
            DomainError: if the two triples have opposite cyclic orientation.
        """
        forward = cls._to_zero_one_inf(*source)
        backward = cls._to_zero_one_inf(*target)
        m = np.linalg.inv(backward) @ forward
        if np.linalg.det(m) < 0:
            raise DomainError("Point triples have opposite orientation")
        return cls.from_matrix(m)

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]])

    @property
    def det(self) -> float:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> float:
        return self.a + self.d

    def __matmul__(self, other: "Mobius") -> "Mobius":
        return Mobius(
            a=self.a * other.a + self.b * other.c,
            b=self.a * other.b + self.b * other.d,
            c=self.c * other.a + self.d * other.c,
            d=self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "Mobius":
        return Mobius(a=self.d, b=-self.b, c=-self.c, d=self.a)

    @overload
    def __call__(self, z: complex) -> complex: ...

    @overload
    def __call__(self, z: float) -> float: ...

    def __call__(self, z: Point) -> Point:
        if is_infinite(z):
            return self.a / self.c if self.c != 0 else INF
        denominator = self.c * z + self.d
        if denominator == 0:
            return INF
        return (self.a * z + self.b) / denominator

    def is_parabolic(self, tol: float = 1e-9) -> bool:
        return abs(abs(self.trace) - 2.0) < tol

    def translation_length(self) -> float:
        """Hyperbolic translation length; zero for elliptic and parabolic maps."""
        half = abs(self.trace) / 2.0
        return 2.0 * math.acosh(half) if half > 1.0 else 0.0

    def fixed_points(self) -> list[Point]:
        """Fixed points on the Riemann sphere (solutions of ``c z^2 + (d - a) z - b = 0``)."""
        if abs(self.c) < 1e-15:
            if abs(self.d - self.a) < 1e-15:
                return [INF]
            return [self.b / (self.d - self.a), INF]
        disc = cmath.sqrt((self.a - self.d) ** 2 + 4 * self.b * self.c)
        roots = [(self.a - self.d + disc) / (2 * self.c), (self.a - self.d - disc) / (2 * self.c)]
        points: list[Point] = []
        for root in roots:
            value: Point = root.real if abs(root.imag) < 1e-12 else root
            if not any(abs(value - seen) < 1e-12 for seen in points):
                points.append(value)
        return points

    def to_list(self) -> list[list[float]]:
        """Row-major matrix scaled to determinant 1.

        The overall sign is fixed so that the first non-zero entry of the bottom
        row is positive, which picks one representative in PSL(2, R).
        """
        scale = 1.0 / math.sqrt(self.det)
        if self.c < 0 or (self.c == 0 and self.d < 0):
            scale = -scale
        return [[self.a * scale, self.b * scale], [self.c * scale, self.d * scale]]


def hyperbolic_distance(z: complex, w: complex) -> float:
    """Distance in the upper half-plane."""
    return math.acosh(1.0 + abs(z - w) ** 2 / (2.0 * z.imag * w.imag))


def distance_to_geodesic(z: complex, a: float, b: float) -> float:
    """Distance from ``z`` to the geodesic with boundary end points ``a`` and ``b``."""
    if math.isinf(a):
        w = -1.0 / (z - b)
    elif math.isinf(b):
        w = z - a
    else:
        w = (z - a) / (z - b)
    # The geodesic is now the imaginary axis
    return math.asinh(abs(w.real) / abs(w.imag))


def disk_from_half_plane(z: Point) -> complex:
    """Cayley-type map ``z -> (z - p) / (z - conj p)`` with ``p = exp(i pi / 3)``."""
    p = cmath.exp(1j * math.pi / 3)
    if is_infinite(z):
        return 1 + 0j
    return (z - p) / (z - p.conjugate())


def half_plane_from_disk(w: complex) -> Point:
    """Inverse of :func:`disk_from_half_plane`."""
    p = cmath.exp(1j * math.pi / 3)
    if abs(1 - w) < 1e-15:
        return INF
    z = (p - p.conjugate() * w) / (1 - w)
    return z.real if abs(w) == 1 and abs(z.imag) < 1e-12 else z
