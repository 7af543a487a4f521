"""Fundamental polygon assembly, side pairings and the vertex-cycle parabolicity test."""

import math

from pydantic import BaseModel, Field

from ..config import get_config
from ..errors import DomainError, InternalConsistencyError
from ..graph.core import require_valid, trace_lht_paths
from ..graph.models import LhtPath, RotationGraph
from ..utils import LoggingConfig
from .mobius import Mobius, chordal_distance, hyperbolic_distance
from .triangle import SIDE_FRAMES, MarkedIdealTriangle, TickShifts, place_triangle

logger = LoggingConfig.get_logger("src.geometry.polygon")


class CycleTransform(BaseModel):
    """Vertex-cycle transformation of one cusp."""

    path: LhtPath
    transform: Mobius

    @property
    def trace_residual(self) -> float:
        return abs(abs(self.transform.trace) - 2.0)


class FundamentalPolygon(BaseModel):
    """Placed triangles, the spanning tree that placed them, and the side pairings."""

    triangles: dict[int, MarkedIdealTriangle]
    tree_darts: list[int] = Field(description="Both darts of every spanning-tree edge")
    side_pairings: dict[int, Mobius] = Field(description="Pairing carrying twin(d)'s side onto d's")
    cycle_transforms: list[CycleTransform] = Field(default_factory=list)

    def pairing(self, dart: int) -> Mobius:
        """Side pairing of ``dart``; the identity across tree edges."""
        return self.side_pairings.get(dart, Mobius.identity())

    def pairing_matrices(self) -> dict[int, list[list[float]]]:
        """Row-major, determinant-1 matrices of the non-tree side pairings, by dart."""
        return {dart: self.side_pairings[dart].to_list() for dart in sorted(self.side_pairings)}


def _local_indices(g: RotationGraph) -> list[int]:
    local = [0] * g.dart_count
    for vertex in range(g.vertex_count):
        for index, dart in enumerate(g.vertex_darts(vertex)):
            local[dart] = index
    return local


def _gluing(g: RotationGraph, local: list[int], shifts: TickShifts, dart: int) -> Mobius:
    """Map placing the neighbour across ``dart`` relative to the triangle of ``dart``.

    Side ``j`` of the neighbour lands on side ``i`` reversed, shifted ticks matched.
    """
    partner = g.twin[dart]
    s = 0.5 * (shifts[dart] + shifts[partner])
    flip = Mobius(a=0.0, b=-math.exp(s), c=math.exp(-s), d=0.0)
    return SIDE_FRAMES[local[dart]] @ flip @ SIDE_FRAMES[local[partner]].inverse()


def _check_matching(
    g: RotationGraph,
    local: list[int],
    triangles: dict[int, MarkedIdealTriangle],
    polygon_pairing: dict[int, Mobius],
    tol: float,
) -> None:
    for dart in range(g.dart_count):
        pairing = polygon_pairing.get(dart, Mobius.identity())
        partner = g.twin[dart]
        here = triangles[g.dart_vertex[dart]]
        there = triangles[g.dart_vertex[partner]]
        start, end = here.side(local[dart])
        other_start, other_end = there.side(local[partner])
        tick_error = hyperbolic_distance(
            pairing(there.tick_marks[local[partner]]), here.tick_marks[local[dart]]
        )
        end_error = max(
            chordal_distance(pairing(other_start), end),
            chordal_distance(pairing(other_end), start),
        )
        if tick_error > tol or end_error > tol:
            logger.error(
                "Side matching failed", dart=dart, tick_error=tick_error, end_error=end_error
            )
            raise InternalConsistencyError(
                f"Side of dart {dart} does not match its partner "
                f"(tick error {tick_error:.3e}, end point error {end_error:.3e})"
            )


def assemble_polygon(g: RotationGraph, shifts: TickShifts | None = None) -> FundamentalPolygon:
    """Unfold the graph into placed marked ideal triangles.

    Triangle 0 is standard. A breadth-first spanning tree from vertex 0, with
    darts visited in id order, places each neighbour by gluing side to side and
    tick to tick. Every non-tree dart ``d`` gets the pairing
    ``A_d = M_v G(d) M_w^-1`` carrying the side of ``twin(d)`` onto that of ``d``.

    Raises:
        GraphValidationError: if ``g`` is invalid.
        DomainError: if placed ideal vertices collide numerically.
    """
    require_valid(g)
    shifts = shifts or TickShifts.zero()
    tolerances = get_config().tolerances
    local = _local_indices(g)

    placements: dict[int, Mobius] = {0: Mobius.identity()}
    tree: set[int] = set()
    queue = [0]
    for vertex in queue:
        for dart in sorted(g.vertex_darts(vertex)):
            neighbour = g.dart_vertex[g.twin[dart]]
            if neighbour not in placements:
                placements[neighbour] = placements[vertex] @ _gluing(g, local, shifts, dart)
                tree.update((dart, g.twin[dart]))
                queue.append(neighbour)

    triangles = {}
    for vertex in range(g.vertex_count):
        alphas = tuple(shifts[d] for d in g.vertex_darts(vertex))
        triangle = place_triangle(placements[vertex], alphas)  # type: ignore[arg-type]
        separation = triangle.min_vertex_separation()
        if separation < tolerances.degeneracy:
            raise DomainError(
                f"Triangle {vertex} is numerically degenerate (vertex separation {separation:.3e})"
            )
        triangles[vertex] = triangle

    side_pairings = {}
    for dart in range(g.dart_count):
        if dart in tree:
            continue
        partner_vertex = g.dart_vertex[g.twin[dart]]
        side_pairings[dart] = (
            placements[g.dart_vertex[dart]]
            @ _gluing(g, local, shifts, dart)
            @ placements[partner_vertex].inverse()
        )

    _check_matching(g, local, triangles, side_pairings, tolerances.placement)

    polygon = FundamentalPolygon(
        triangles=triangles,
        tree_darts=sorted(tree),
        side_pairings=side_pairings,
    )
    polygon.cycle_transforms = [
        CycleTransform(path=path, transform=transform)
        for path, transform in vertex_cycle_transforms(polygon, g).items()
    ]
    logger.info(
        "Assembled fundamental polygon",
        triangles=len(triangles),
        side_pairings=len(side_pairings),
    )
    return polygon


def vertex_cycle_transforms(p: FundamentalPolygon, g: RotationGraph) -> dict[LhtPath, Mobius]:
    """Product ``A_{d_0} ... A_{d_{n-1}}`` of the pairings met around every cusp.

    The product fixes the placed corner of ``twin(d_{n-1})``.
    """
    transforms = {}
    for path in trace_lht_paths(g):
        product = Mobius.identity()
        for dart in path.darts:
            product = product @ p.pairing(dart)
        transforms[path] = product
    return transforms


def parabolicity_residuals(p: FundamentalPolygon) -> dict[LhtPath, float]:
    """``| |trace| - 2 |`` of every vertex-cycle transformation."""
    return {entry.path: entry.trace_residual for entry in p.cycle_transforms}


def check_shift_condition(g: RotationGraph, shifts: TickShifts) -> dict[LhtPath, float]:
    """Total shear around every cusp; the condition holds iff all sums vanish.

    Each edge carries the shear ``alpha(d) + alpha(twin d)``, so a path's sum
    collects both shifts of every side it turns around. The cycle transform of
    the path then has ``|trace| = 2 cosh(S / 2)``.
    """
    require_valid(g)
    return {
        path: sum(shifts[d] + shifts[g.twin[d]] for d in path.darts)
        for path in trace_lht_paths(g)
    }


def cusp_sizes(g: RotationGraph) -> dict[LhtPath, float]:
    """Cusp size = number of standard horocyclic segments (each of length 1) around it."""
    return {path: float(path.length) for path in trace_lht_paths(g)}


def large_cusps(g: RotationGraph, threshold: float = 2 * math.pi) -> bool:
    """Whether every cusp is bigger than ``threshold``."""
    return all(size > threshold for size in cusp_sizes(g).values())
