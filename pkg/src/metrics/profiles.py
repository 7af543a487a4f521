"""Radial conformal metrics ``exp(2 u(r)) |dz|^2`` on the disk and the punctured disk.

Profiles evaluate ``u`` and its first two derivatives on floats or numpy
arrays. Curvature follows the polar Laplacian:
``kappa = -(u'' + u'/r) exp(-2 u)``.
"""

import math
from abc import ABC, abstractmethod

import numpy as np
from pydantic import BaseModel, computed_field

from ..config import get_config
from ..errors import DomainError
from ..utils import LoggingConfig

logger = LoggingConfig.get_logger("src.metrics.profiles")

ArrayLike = float | np.ndarray


def _check_open_unit(name: str, r: ArrayLike) -> None:
    values = np.asarray(r, dtype=float)
    if not np.all((values > 0) & (values < 1)):
        raise DomainError(f"{name} needs 0 < r < 1; got r={r}")


class RadialProfile(ABC):
    """A radial metric profile ``u`` on ``[0, 1)`` or ``(0, 1)``."""

    #: Points where the profile switches between pieces.
    breakpoints: list[float] = []
    #: Whether the profile extends across the origin (a metric on the whole disk).
    disk_metric: bool = False

    @abstractmethod
    def u(self, r: ArrayLike) -> ArrayLike: ...

    @abstractmethod
    def du(self, r: ArrayLike) -> ArrayLike: ...

    @abstractmethod
    def d2u(self, r: ArrayLike) -> ArrayLike: ...

    @property
    def name(self) -> str:
        return type(self).__name__


class DStarProfile(RadialProfile):
    """Complete hyperbolic metric of the punctured disk: ``u = log(-1 / (r log r))``."""

    def u(self, r: ArrayLike) -> ArrayLike:
        L = -np.log(r)
        return -np.log(r) - np.log(L)

    def du(self, r: ArrayLike) -> ArrayLike:
        L = -np.log(r)
        return (1 - L) / (r * L)

    def d2u(self, r: ArrayLike) -> ArrayLike:
        L = -np.log(r)
        return (1 - 1 / L + 1 / L**2) / r**2

    def d3u(self, r: ArrayLike) -> ArrayLike:
        L = -np.log(r)
        return -(2 - 2 / L + 3 / L**2 - 2 / L**3) / r**3


class DiskProfile(RadialProfile):
    """Complete hyperbolic metric of the disk: ``u = log(2 / (1 - r^2))``."""

    disk_metric = True

    def u(self, r: ArrayLike) -> ArrayLike:
        return np.log(2.0) - np.log1p(-np.square(r))

    def du(self, r: ArrayLike) -> ArrayLike:
        return 2 * r / (1 - np.square(r))

    def d2u(self, r: ArrayLike) -> ArrayLike:
        q = 1 - np.square(r)
        return 2 * (1 + np.square(r)) / q**2


class ShiftedProfile(RadialProfile):
    """``u + shift``: the base metric scaled by ``exp(2 shift)``."""

    def __init__(self, base: RadialProfile, shift: float):
        self.base = base
        self.shift = shift
        self.breakpoints = list(base.breakpoints)
        self.disk_metric = base.disk_metric

    def u(self, r: ArrayLike) -> ArrayLike:
        return self.base.u(r) + self.shift

    def du(self, r: ArrayLike) -> ArrayLike:
        return self.base.du(r)

    def d2u(self, r: ArrayLike) -> ArrayLike:
        return self.base.d2u(r)

    @property
    def name(self) -> str:
        return f"{self.base.name}{self.shift:+.6g}"


def u_dstar(r: float) -> float:
    """``log(-1 / (r log r))`` for ``0 < r < 1``."""
    _check_open_unit("u_dstar", r)
    return float(DStarProfile().u(r))


def horoball_area(r: float) -> float:
    """Area ``-2 pi / log r`` of ``{0 < |z| < r}`` in the complete punctured-disk metric."""
    _check_open_unit("horoball_area", r)
    return -2 * math.pi / math.log(r)


def radial_curvature(p: RadialProfile, r: float) -> float:
    """Gaussian curvature of the profile at radius ``r``.

    At ``r = 0`` the limit ``-2 u''(0) exp(-2 u(0))`` is used, which needs a
    disk metric with ``u'(0) = 0``.
    """
    if r == 0:
        if not p.disk_metric or abs(float(p.du(0.0))) > get_config().tolerances.continuity:
            raise DomainError(f"{p.name} has no curvature limit at r=0")
        return float(-2 * p.d2u(0.0) * np.exp(-2 * p.u(0.0)))
    if not 0 < r < 1:
        raise DomainError(f"radial_curvature needs 0 <= r < 1; got r={r}")
    return float(curvature_values(p, np.asarray(r, dtype=float)))


def curvature_values(p: RadialProfile, grid: np.ndarray) -> np.ndarray:
    """Vectorized curvature on radii in ``(0, 1)``."""
    return -(p.d2u(grid) + p.du(grid) / grid) * np.exp(-2 * p.u(grid))


def boundary_geodesic_curvature(p: RadialProfile, r: float) -> float:
    """Total geodesic curvature ``2 pi (1 + r u'(r))`` of the circle ``|z| = r``."""
    return float(2 * math.pi * (1 + r * p.du(r)))


def finite_difference_curvature(p: RadialProfile, r: float, h: float | None = None) -> float:
    """Curvature from five-point central differences of ``u`` alone."""
    h = h or get_config().numerics.fd_step
    values = [float(p.u(r + k * h)) for k in (-2, -1, 0, 1, 2)]
    first = (values[0] - 8 * values[1] + 8 * values[3] - values[4]) / (12 * h)
    second = (-values[0] + 16 * values[1] - 30 * values[2] + 16 * values[3] - values[4]) / (
        12 * h * h
    )
    return -(second + first / r) * math.exp(-2 * values[2])


def default_grid(n: int | None = None) -> np.ndarray:
    """``n`` Chebyshev-spaced radii in ``(0, 1)``, dense near both ends."""
    n = n or get_config().numerics.grid_size
    k = np.arange(n)
    return 0.5 * (1 - np.cos(np.pi * (k + 0.5) / n))


class CurvatureReport(BaseModel):
    """Curvature of a profile sampled on a grid."""

    grid: list[float]
    kappa: list[float]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def min(self) -> float:
        return min(self.kappa)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def max(self) -> float:
        return max(self.kappa)


def curvature_report(p: RadialProfile, grid: np.ndarray | None = None) -> CurvatureReport:
    grid = default_grid() if grid is None else np.asarray(grid, dtype=float)
    kappa = curvature_values(p, grid)
    if not np.all(np.isfinite(kappa)):
        raise DomainError(f"{p.name} has non-finite curvature on the grid")
    return CurvatureReport(grid=grid.tolist(), kappa=kappa.tolist())

