"""SVG plots of radial profiles and their curvature."""

from pathlib import Path

import numpy as np

from ..geometry.render import new_figure, save_svg
from .profiles import DStarProfile, RadialProfile, curvature_values, default_grid


def plot_profile(p: RadialProfile, path: str | Path, samples: int = 600) -> None:
    """Plot ``u`` against ``u_{D*}`` and the curvature, marking the breakpoints."""
    grid = default_grid(samples)
    fig, (left, right) = new_figure(ncols=2, size=4.0)

    left.plot(grid, p.u(grid), label=p.name)
    left.plot(grid, DStarProfile().u(grid), linestyle=":", color="0.4", label="u_D*")
    left.set_xlabel("r")
    left.set_ylabel("u(r)")
    left.set_ylim(top=float(np.percentile(p.u(grid), 99)) + 1)
    left.legend(frameon=False)

    right.plot(grid, curvature_values(p, grid))
    right.axhline(-1.0, linestyle=":", color="0.4")
    right.set_xlabel("r")
    right.set_ylabel("curvature")

    for ax in (left, right):
        for point in p.breakpoints:
            ax.axvline(point, color="0.75", linewidth=0.6)

    save_svg(fig, path)
