"""SVG rendering of fundamental polygons in the disk model."""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from matplotlib.figure import Figure  # noqa: E402

from ..errors import InputError  # noqa: E402
from ..graph.models import RotationGraph  # noqa: E402
from ..utils import LoggingConfig  # noqa: E402
from .mobius import disk_from_half_plane  # noqa: E402
from .polygon import FundamentalPolygon  # noqa: E402

logger = LoggingConfig.get_logger("src.geometry.render")

_STYLE = {
    "axes.linewidth": 0.6,
    "font.size": 8,
    "svg.fonttype": "none",
    "savefig.bbox": "tight",
}


def new_figure(ncols: int = 1, size: float = 5.0) -> tuple[Figure, list[plt.Axes]]:
    with plt.rc_context(_STYLE):
        fig, axes = plt.subplots(nrows=1, ncols=ncols, figsize=(size * ncols, size))
    return fig, list(np.atleast_1d(axes))


def save_svg(fig: Figure, path: str | Path) -> None:
    """Write ``fig`` as SVG and release it."""
    try:
        with plt.rc_context(_STYLE):
            fig.savefig(path, format="svg")
    except OSError as e:
        raise InputError(f"Cannot write {path}: {e.strerror or e}") from e
    finally:
        plt.close(fig)
    logger.info("Wrote SVG", path=str(path))


def geodesic_points(a: float, b: float, samples: int = 240, span: float = 14.0) -> np.ndarray:
    """Points of the half-plane geodesic from ``a`` to ``b`` (either may be infinite)."""
    t = np.exp(np.linspace(-span, span, samples))
    z = 1j * t
    if np.isinf(a):
        points = b - 1.0 / z
    elif np.isinf(b):
        points = a + z
    else:
        points = (b * z + a) / (z + 1.0)
    return np.where(points.imag < 0, points.conj(), points)


def _to_disk(points: np.ndarray) -> np.ndarray:
    return np.array([disk_from_half_plane(complex(z)) for z in points])


def draw_unit_circle(ax: plt.Axes) -> None:
    theta = np.linspace(0, 2 * np.pi, 400)
    ax.plot(np.cos(theta), np.sin(theta), color="black", linewidth=0.8)
    ax.set_aspect("equal")
    ax.set_xlim(-1.05, 1.05)
    ax.set_ylim(-1.05, 1.05)
    ax.axis("off")


def render_polygon(p: FundamentalPolygon, g: RotationGraph, path: str | Path) -> None:
    """Disk-model picture of the placed triangles, their ticks and the side pairings.

    Paired sides share a colour and an arrow runs from the partner's tick to
    the tick it is carried onto.
    """
    fig, (ax,) = new_figure()
    draw_unit_circle(ax)
    colours = plt.get_cmap("tab20")

    for vertex, triangle in p.triangles.items():
        for side in range(3):
            dart = g.vertex_darts(vertex)[side]
            curve = _to_disk(geodesic_points(*triangle.side(side)))
            if dart in p.side_pairings:
                key = min(dart, g.twin[dart])
                ax.plot(curve.real, curve.imag, color=colours(key % 20), linewidth=1.4)
            else:
                ax.plot(curve.real, curve.imag, color="0.6", linewidth=0.5, linestyle="--")
        ticks = _to_disk(np.array(triangle.tick_marks))
        ax.plot(ticks.real, ticks.imag, "k.", markersize=3)
        centre = _to_disk(np.array([triangle.placement(complex(0.5, np.sqrt(3) / 2))]))[0]
        ax.annotate(str(vertex), (centre.real, centre.imag), ha="center", va="center")

    for dart, pairing in p.side_pairings.items():
        if dart > g.twin[dart]:
            continue
        partner = g.twin[dart]
        there = p.triangles[g.dart_vertex[partner]]
        source_tick = there.tick_marks[g.vertex_darts(g.dart_vertex[partner]).index(partner)]
        start = disk_from_half_plane(source_tick)
        end = disk_from_half_plane(pairing(source_tick))
        ax.annotate(
            "",
            xy=(end.real, end.imag),
            xytext=(start.real, start.imag),
            arrowprops={"arrowstyle": "->", "color": colours(dart % 20), "linewidth": 0.6},
        )

    save_svg(fig, path)
