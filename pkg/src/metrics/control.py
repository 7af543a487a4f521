"""Curvature-controlled profiles and the Ahlfors-Schwarz comparison check.

A radial metric is encoded by ``g = (u'/r) exp(-2u)``. Then
``exp(-2u(r)) = E(r) = int_r^1 2 s g(s) ds`` and

    kappa = -2 g - r g' - 2 r^2 g^2 / E.

The controlled profile uses ``g_D + K`` on the inside, a quintic smoothstep
blend on ``[r_eps - s, r_eps]`` and ``g_{D*}`` from ``r_eps`` on, so the metric
is exactly the punctured-disk metric near the boundary. ``r_eps`` moves toward
1 and ``s`` shrinks by halving until the curvature stays within
``[-(1 + eps), -1/(1 + eps)]`` on the check grid.
"""

import math
from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy import integrate

from ..config import get_config
from ..errors import DomainError, PreconditionError
from ..utils import LoggingConfig
from .profiles import (
    ArrayLike,
    DiskProfile,
    DStarProfile,
    RadialProfile,
    ShiftedProfile,
    curvature_values,
    default_grid,
)

logger = LoggingConfig.get_logger("src.metrics.control")

_DSTAR = DStarProfile()


def g_disk(r: ArrayLike) -> ArrayLike:
    return (1 - np.square(r)) / 2


def g_disk_prime(r: ArrayLike) -> ArrayLike:
    return -np.asarray(r)


def g_dstar(r: ArrayLike) -> ArrayLike:
    L = -np.log(r)
    return L - L**2


def g_dstar_prime(r: ArrayLike) -> ArrayLike:
    L = -np.log(r)
    return (2 * L - 1) / r


def curvature_from_g(r: ArrayLike, g: ArrayLike, dg: ArrayLike, e: ArrayLike) -> ArrayLike:
    """Curvature of the metric with ``g``, ``g'`` and ``E`` given at ``r``."""
    return -2 * g - r * dg - 2 * np.square(r) * np.square(g) / e


def _smoothstep(t: ArrayLike) -> tuple[ArrayLike, ArrayLike]:
    """Quintic ``6t^5 - 15t^4 + 10t^3`` and its derivative."""
    t = np.clip(t, 0.0, 1.0)
    return t**3 * (10 - 15 * t + 6 * t**2), 30 * t**2 * (1 - t) ** 2


class ControlledProfile(RadialProfile):
    """Disk metric whose curvature is pinched near -1 and which equals ``u_{D*}`` near 1."""

    disk_metric = True

    def __init__(self, r_eps: float, width: float):
        self.r_eps = r_eps
        self.width = width
        self.start = r_eps - width
        self.shift = float(g_dstar(r_eps) - g_disk(r_eps))
        self.breakpoints = [self.start, r_eps]
        self._e_eps = float(r_eps**2 * math.log(r_eps) ** 2)
        self._e_start = self._e_eps + self._blend_integral(self.start)

    # g and g' piece by piece
    def _inner_g(self, r: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return g_disk(r) + self.shift, g_disk_prime(r)

    def _blend_g(self, r: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        sigma, dsigma = _smoothstep((r - self.start) / self.width)
        inner, inner_prime = self._inner_g(r)
        outer, outer_prime = g_dstar(r), g_dstar_prime(r)
        g = (1 - sigma) * inner + sigma * outer
        dg = (1 - sigma) * inner_prime + sigma * outer_prime + dsigma / self.width * (outer - inner)
        return g, dg

    def g(self, r: ArrayLike) -> tuple[np.ndarray, np.ndarray]:
        """``g`` and ``g'`` at ``r``."""
        values = np.atleast_1d(np.asarray(r, dtype=float))
        g = np.empty_like(values)
        dg = np.empty_like(values)
        for mask, piece in (
            (values < self.start, self._inner_g),
            ((values >= self.start) & (values < self.r_eps), self._blend_g),
            (values >= self.r_eps, lambda x: (g_dstar(x), g_dstar_prime(x))),
        ):
            g[mask], dg[mask] = piece(values[mask])
        return g, dg

    def _blend_integral(self, r: float) -> float:
        value, _ = integrate.quad(
            lambda s: 2 * s * float(self._blend_g(np.array([s]))[0][0]),
            r,
            self.r_eps,
            epsabs=1e-14,
            epsrel=1e-12,
        )
        return float(value)

    def _inner_antiderivative(self, r: np.ndarray) -> np.ndarray:
        # d/dr of this is 2 r (g_D + K)
        return r**2 / 2 - r**4 / 4 + self.shift * r**2

    def energy(self, r: ArrayLike) -> np.ndarray:
        """``E(r) = exp(-2u(r))``."""
        values = np.atleast_1d(np.asarray(r, dtype=float))
        out = np.empty_like(values)
        inner = values < self.start
        outer = values >= self.r_eps
        out[inner] = self._e_start + (
            self._inner_antiderivative(self.start) - self._inner_antiderivative(values[inner])
        )
        out[outer] = np.square(values[outer] * np.log(values[outer]))
        for i in np.flatnonzero(~inner & ~outer):
            out[i] = self._e_eps + self._blend_integral(float(values[i]))
        return out

    def _finish(self, r: ArrayLike, out: np.ndarray) -> ArrayLike:
        return out.reshape(np.shape(r)) if np.ndim(r) else float(out[0])

    def u(self, r: ArrayLike) -> ArrayLike:
        values = np.atleast_1d(np.asarray(r, dtype=float))
        out = -0.5 * np.log(self.energy(values))
        outer = values >= self.r_eps
        out[outer] = _DSTAR.u(values[outer])
        return self._finish(r, out)

    def du(self, r: ArrayLike) -> ArrayLike:
        values = np.atleast_1d(np.asarray(r, dtype=float))
        g, _ = self.g(values)
        out = values * g / self.energy(values)
        outer = values >= self.r_eps
        out[outer] = _DSTAR.du(values[outer])
        return self._finish(r, out)

    def d2u(self, r: ArrayLike) -> ArrayLike:
        values = np.atleast_1d(np.asarray(r, dtype=float))
        g, dg = self.g(values)
        e = self.energy(values)
        out = (g + values * dg) / e + 2 * np.square(values * g / e)
        outer = values >= self.r_eps
        out[outer] = _DSTAR.d2u(values[outer])
        return self._finish(r, out)

    def curvature(self, r: ArrayLike) -> ArrayLike:
        """Curvature through the ``g`` representation."""
        values = np.atleast_1d(np.asarray(r, dtype=float))
        g, dg = self.g(values)
        return self._finish(r, curvature_from_g(values, g, dg, self.energy(values)))


class ControlResult(BaseModel):
    """Outcome of the curvature-control construction."""

    eps: float
    r_eps: float
    width: float
    halvings: int
    kappa_min: float
    kappa_max: float
    lower_bound: float
    upper_bound: float
    matches_dstar: bool
    grid_size: int
    smoothing_scheme: str = "iterative halving of 1 - r_eps and the blend width"


class ControlledMetric(BaseModel):
    """A controlled profile together with its grid report."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    profile: ControlledProfile = Field(exclude=True)
    report: ControlResult

    @property
    def r_eps(self) -> float:
        return self.report.r_eps


def curvature_control_profile(
    eps: float, grid: np.ndarray | None = None
) -> ControlledMetric:
    """Profile with curvature in ``[-(1 + eps), -1/(1 + eps)]``, equal to ``u_{D*}`` past r_eps.

    Raises:
        PreconditionError: if ``eps <= 0``.
        DomainError: if the bound is still violated after the configured number of halvings.
    """
    if not eps > 0:
        raise PreconditionError(f"eps must be positive; got eps={eps}")
    grid = default_grid() if grid is None else np.asarray(grid, dtype=float)
    lower, upper = -(1 + eps), -1 / (1 + eps)
    max_halvings = get_config().numerics.max_halvings

    gap = 0.5
    worst = (math.nan, math.nan)
    for halving in range(max_halvings + 1):
        profile = ControlledProfile(1 - gap, gap / 2)
        kappa = curvature_values(profile, grid)
        worst = (float(kappa.min()), float(kappa.max()))
        if worst[0] >= lower and worst[1] <= upper:
            outer = grid[grid >= profile.r_eps]
            matches = bool(
                np.allclose(profile.u(outer), _DSTAR.u(outer), rtol=0, atol=1e-8)
            )
            result = ControlResult(
                eps=eps,
                r_eps=profile.r_eps,
                width=profile.width,
                halvings=halving,
                kappa_min=worst[0],
                kappa_max=worst[1],
                lower_bound=lower,
                upper_bound=upper,
                matches_dstar=matches,
                grid_size=len(grid),
            )
            logger.info(
                "Built curvature-controlled profile",
                eps=eps,
                r_eps=profile.r_eps,
                halvings=halving,
            )
            return ControlledMetric(profile=profile, report=result)
        logger.warning(
            "Curvature bound missed; halving",
            eps=eps,
            gap=gap,
            kappa_min=worst[0],
            kappa_max=worst[1],
        )
        gap /= 2

    raise DomainError(
        f"No controlled profile for eps={eps} after {max_halvings} halvings; "
        f"last curvature range [{worst[0]:.6g}, {worst[1]:.6g}] vs [{lower:.6g}, {upper:.6g}]"
    )


class ComparisonVerdict(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    HYPOTHESIS_VIOLATION = "hypothesis_violation"


class ComparisonReport(BaseModel):
    """Grid check of ``kappa_1 <= kappa_2 < 0  =>  u_1 <= u_2``."""

    verdict: ComparisonVerdict
    first: str
    second: str
    max_excess: float
    hypothesis_failures: int
    grid_size: int

    @property
    def holds(self) -> bool:
        return self.verdict is ComparisonVerdict.HOLDS


def compare_metrics(
    p1: RadialProfile, p2: RadialProfile, grid: np.ndarray | None = None, tol: float = 1e-10
) -> ComparisonReport:
    """Check ``ds_1^2 <= ds_2^2`` on a grid, after checking the curvature hypothesis there."""
    grid = default_grid() if grid is None else np.asarray(grid, dtype=float)
    kappa1 = curvature_values(p1, grid)
    kappa2 = curvature_values(p2, grid)
    slack = get_config().tolerances.continuity
    failures = int(np.count_nonzero((kappa1 > kappa2 + slack) | (kappa2 >= 0)))
    excess = float(np.max(np.asarray(p1.u(grid)) - np.asarray(p2.u(grid))))

    if failures:
        verdict = ComparisonVerdict.HYPOTHESIS_VIOLATION
        logger.warning(
            "Comparison hypothesis fails", first=p1.name, second=p2.name, points=failures
        )
    elif excess <= tol:
        verdict = ComparisonVerdict.HOLDS
    else:
        verdict = ComparisonVerdict.FAILS
    return ComparisonReport(
        verdict=verdict,
        first=p1.name,
        second=p2.name,
        max_excess=excess,
        hypothesis_failures=failures,
        grid_size=len(grid),
    )


def comparison_sandwich(
    eps: float, grid: np.ndarray | None = None
) -> tuple[ComparisonReport, ComparisonReport]:
    """Both halves of ``ds_D^2 / (1 + eps) <= ds^2 <= (1 + eps) ds_D^2``.

    ``ds^2`` is the curvature-controlled profile for ``eps``.
    """
    grid = default_grid() if grid is None else np.asarray(grid, dtype=float)
    profile = curvature_control_profile(eps, grid).profile
    disk = DiskProfile()
    lower = compare_metrics(ShiftedProfile(disk, 0.5 * math.log(1 / (1 + eps))), profile, grid)
    upper = compare_metrics(profile, ShiftedProfile(disk, 0.5 * math.log(1 + eps)), grid)
    return lower, upper
