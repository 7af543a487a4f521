"""Negatively curved fill-in of a large horoball neighbourhood.

When ``area(B_r0) > 2 pi``, i.e. ``r0 > 1/e``, the punctured-disk metric on
``r0 <= |z| < 1`` extends across the puncture with negative curvature. The
fill-in prescribes ``w = u''``: a constant ``c`` on ``[0, r0 - h]`` joined by a
cubic Hermite piece to ``u''_{D*}`` at ``r0``, with ``c`` chosen so that
``v = u'`` reaches ``u'_{D*}(r0)`` exactly. The join width ``h`` is halved
until ``w`` stays positive across the join.
"""

import math
from collections.abc import Callable

import numpy as np
from numpy.polynomial import Polynomial
from pydantic import BaseModel

from ..config import get_config
from ..errors import InternalConsistencyError, PreconditionError
from ..utils import LoggingConfig
from .profiles import (
    ArrayLike,
    DStarProfile,
    RadialProfile,
    curvature_values,
    default_grid,
    finite_difference_curvature,
    radial_curvature,
)

logger = LoggingConfig.get_logger("src.metrics.extension")

_DSTAR = DStarProfile()

#: Widest join between the constant and the punctured-disk pieces.
MAX_JOIN_WIDTH = 0.05


def _hermite(p0: float, m0: float, p1: float, m1: float) -> Polynomial:
    """Cubic in ``t`` on ``[0, 1]`` with end values ``p0, p1`` and ``t``-slopes ``m0, m1``."""
    h00 = Polynomial([1, 0, -3, 2])
    h10 = Polynomial([0, 1, -2, 1])
    h01 = Polynomial([0, 0, 3, -2])
    h11 = Polynomial([0, 0, -1, 1])
    return p0 * h00 + m0 * h10 + p1 * h01 + m1 * h11


def _minimum_on_unit_interval(p: Polynomial) -> float:
    candidates = [0.0, 1.0]
    candidates += [
        float(root.real)
        for root in p.deriv().roots()
        if abs(root.imag) < 1e-12 and 0 < root.real < 1
    ]
    return min(float(p(t)) for t in candidates)


class ExtendedProfile(RadialProfile):
    """``u`` equal to ``u_{D*}`` on ``[r0, 1)`` and convex, increasing inside.

    The join piece is stored in the local variable ``t = (r - a) / h`` so that
    narrow joins keep full precision.
    """

    disk_metric = True

    def __init__(self, r0: float, h: float):
        self.r0 = r0
        self.h = h
        self.a = r0 - h

        target = float(_DSTAR.du(r0))
        w1 = float(_DSTAR.d2u(r0))
        w1_slope = float(_DSTAR.d3u(r0))
        self.c = (target - h * w1 / 2 + h**2 * w1_slope / 12) / (r0 - h / 2)

        w_inner = Polynomial([self.c])
        v_inner = w_inner.integ(lbnd=0)
        u_inner = v_inner.integ(lbnd=0)

        # In t: w = W(t), v = v(a) + h * int W, u = u(a) + h v(a) t + h^2 * int int W.
        w_join = _hermite(self.c, 0.0, w1, h * w1_slope)
        w_once = w_join.integ(lbnd=0)
        v_a, u_a = float(v_inner(self.a)), float(u_inner(self.a))
        v_join = v_a + h * w_once
        u_join = u_a + h * v_a * Polynomial([0, 1]) + h**2 * w_once.integ(lbnd=0)
        offset = float(_DSTAR.u(r0)) - float(u_join(1.0))

        self.w_pieces = (w_inner, w_join)
        self.v_pieces = (v_inner, v_join)
        self.u_pieces = (u_inner + offset, u_join + offset)
        self.breakpoints = [self.a, r0]

    def join_minimum(self) -> float:
        """Smallest value of ``u''`` on the join."""
        return _minimum_on_unit_interval(self.w_pieces[1])

    def _evaluate(
        self,
        r: ArrayLike,
        pieces: tuple[Polynomial, Polynomial],
        closed_form: Callable[[np.ndarray], ArrayLike],
    ) -> ArrayLike:
        values = np.asarray(r, dtype=float)
        flat = np.atleast_1d(values)
        out = np.empty_like(flat)
        inner = flat < self.a
        join = (flat >= self.a) & (flat < self.r0)
        outer = flat >= self.r0
        out[inner] = pieces[0](flat[inner])
        out[join] = pieces[1]((flat[join] - self.a) / self.h)
        out[outer] = closed_form(flat[outer])
        return out.reshape(values.shape) if values.ndim else float(out[0])

    def u(self, r: ArrayLike) -> ArrayLike:
        return self._evaluate(r, self.u_pieces, _DSTAR.u)

    def du(self, r: ArrayLike) -> ArrayLike:
        return self._evaluate(r, self.v_pieces, _DSTAR.du)

    def d2u(self, r: ArrayLike) -> ArrayLike:
        return self._evaluate(r, self.w_pieces, _DSTAR.d2u)


class ExtensionReport(BaseModel):
    """Grid certification of a fill-in."""

    r0: float
    breakpoints: list[float]
    inner_constant: float
    kappa_min: float
    kappa_max: float
    kappa_at_zero: float
    negative_curvature: bool
    convex: bool
    increasing: bool
    du_at_zero: float
    matches_dstar: bool
    c1_jump: float
    finite_difference_error: float
    grid_size: int


def extend_metric(r0: float) -> ExtendedProfile:
    """Fill in the punctured-disk metric inside ``|z| < r0``.

    The join starts at width ``min(0.05, (r0 - 1/e) / 2)`` and is halved until
    the inner constant and the whole join piece of ``u''`` are positive.

    Raises:
        PreconditionError: if ``r0 <= 1/e``; no negatively curved extension
            exists then because the boundary needs ``u'_{D*}(r0) > 0``.
        InternalConsistencyError: if no join width gives a positive ``u''`` or
            the pieces do not match to first order.
    """
    if not 1 / math.e < r0 < 1:
        raise PreconditionError(
            f"r0 must exceed 1/e (area of B_r0 > 2*pi) and stay below 1; got r0={r0}"
        )
    config = get_config()
    h = min(MAX_JOIN_WIDTH, (r0 - 1 / math.e) / 2)
    for halvings in range(config.numerics.max_halvings + 1):
        profile = ExtendedProfile(r0, h)
        if profile.c > 0 and profile.join_minimum() > 0:
            break
        logger.debug("Narrowing extension join", r0=r0, window=h, inner_constant=profile.c)
        h /= 2
    else:
        raise InternalConsistencyError(
            f"Fill-in for r0={r0} has non-positive u'' after {halvings} halvings"
        )

    jump = _c1_jump(profile)
    if jump > config.tolerances.continuity:
        raise InternalConsistencyError(
            f"Fill-in for r0={r0} is not C1 at its breakpoints (jump {jump:.3g})"
        )
    logger.info(
        "Built metric extension",
        r0=r0,
        inner_constant=profile.c,
        window=profile.h,
        halvings=halvings,
    )
    return profile


def sharpness_certificate(p: RadialProfile, r0: float) -> bool:
    """Whether the boundary condition ``u'_{D*}(r0) > 0`` needed by any fill-in holds.

    Raises:
        PreconditionError: if ``p`` does not agree with ``u_{D*}`` at ``r0``.
    """
    if not 0 < r0 < 1:
        raise PreconditionError(f"r0 must lie in (0, 1); got r0={r0}")
    tol = get_config().tolerances.continuity
    if abs(float(p.u(r0)) - float(_DSTAR.u(r0))) > tol:
        raise PreconditionError(f"{p.name} does not agree with u_D* at r0={r0}")
    return float(_DSTAR.du(r0)) > 1e-12


def _c1_jump(p: RadialProfile) -> float:
    """Largest mismatch of ``u`` and ``u'`` across the breakpoints."""
    jump = 0.0
    for point in p.breakpoints:
        below, above = np.nextafter(point, 0.0), point
        jump = max(
            jump,
            abs(float(p.u(below)) - float(p.u(above))),
            abs(float(p.du(below)) - float(p.du(above))),
        )
    return jump


def certify_extension(p: ExtendedProfile, grid: np.ndarray | None = None) -> ExtensionReport:
    """Check a fill-in on a grid: negative curvature, convexity, monotonicity and matching."""
    grid = default_grid() if grid is None else np.asarray(grid, dtype=float)
    kappa = curvature_values(p, grid)
    outer = grid[grid >= p.r0]
    matches = bool(
        np.all(np.asarray(p.u(outer)) == np.asarray(_DSTAR.u(outer)))
        and np.all(np.asarray(p.du(outer)) == np.asarray(_DSTAR.du(outer)))
    )

    step = get_config().numerics.fd_step
    samples = [
        r
        for r in np.linspace(0.05, 0.95, 91)
        if all(abs(r - point) > 3 * step for point in p.breakpoints)
    ]
    fd_error = max(
        abs(finite_difference_curvature(p, r, step) - radial_curvature(p, r)) for r in samples
    )

    report = ExtensionReport(
        r0=p.r0,
        breakpoints=list(p.breakpoints),
        inner_constant=p.c,
        kappa_min=float(kappa.min()),
        kappa_max=float(kappa.max()),
        kappa_at_zero=radial_curvature(p, 0.0),
        negative_curvature=bool(np.all(kappa < 0)) and radial_curvature(p, 0.0) < 0,
        convex=bool(np.all(np.asarray(p.d2u(grid)) > 0)),
        increasing=bool(np.all(np.asarray(p.du(grid)) > 0)),
        du_at_zero=float(p.du(0.0)),
        matches_dstar=matches,
        c1_jump=_c1_jump(p),
        finite_difference_error=fd_error,
        grid_size=len(grid),
    )
    logger.info(
        "Certified metric extension",
        r0=p.r0,
        kappa_max=report.kappa_max,
        negative_curvature=report.negative_curvature,
    )
    return report
