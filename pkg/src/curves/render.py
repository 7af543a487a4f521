"""SVG pictures of cusp curves in the half-plane strip and in the punctured disk."""

from pathlib import Path

import numpy as np

from ..geometry.render import draw_unit_circle, new_figure, save_svg
from .models import CuspCurve, to_punctured_disk


def render_curve(curve: CuspCurve, path: str | Path, title: str | None = None) -> None:
    """Two panels: three periods of the curve in the half-plane, and its image in ``D*``."""
    points = curve.sample()
    fig, (strip, disk) = new_figure(ncols=2, size=4.0)

    for k in (-1, 0, 1):
        shifted = points + k * curve.period
        strip.plot(shifted.real, shifted.imag, color="C0" if k == 0 else "0.7", linewidth=1.0)
    left = points.real.min()
    for edge in (left, left + curve.period):
        strip.axvline(edge, color="0.6", linestyle=":", linewidth=0.6)
    strip.axhline(0.0, color="black", linewidth=0.8)
    strip.set_ylim(0.0, 1.25 * points.imag.max())
    strip.set_xlabel("Re z")
    strip.set_ylabel("Im z")

    image = to_punctured_disk(points, curve.period)
    draw_unit_circle(disk)
    disk.plot(image.real, image.imag, color="C0", linewidth=1.0)
    disk.plot([0.0], [0.0], marker="o", markersize=3, markerfacecolor="white", color="black")
    boundary = np.exp(-1.0) * np.exp(1j * np.linspace(0, 2 * np.pi, 200))
    disk.plot(boundary.real, boundary.imag, color="0.6", linestyle=":", linewidth=0.6)

    if title:
        fig.suptitle(title)
    save_svg(fig, path)
