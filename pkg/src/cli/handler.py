"""Command implementations and their dispatch for the ``surface`` command line."""

import argparse
import itertools
import json
import sys
from collections.abc import Callable
from pathlib import Path
from typing import Any

import numpy as np
from pydantic import BaseModel, ValidationError

from ..analysis import cusp_equations, solve_angles, symmetry_equalities
from ..config import get_config
from ..curves import (
    CuspCurve,
    convex_counterexample,
    gauss_bonnet_total,
    geodesic_horocycle_curve,
    slit_horocycle,
    slit_parameters,
)
from ..curves.render import render_curve
from ..errors import DomainError, GraphValidationError, InputError, SurfaceError
from ..geometry import (
    TickShifts,
    assemble_polygon,
    check_shift_condition,
    cusp_sizes,
    large_cusps,
    parabolicity_residuals,
)
from ..geometry.render import render_polygon
from ..graph import (
    CongruenceLevel,
    FlipPattern,
    RotationGraph,
    euler_characteristic,
    genus,
    graph_to_json,
    named_graph,
    platonic_graph,
    random_rotation_graph,
    read_graph,
    require_valid,
    symmetry_group,
    symmetry_report,
    trace_lht_paths,
    validate,
)
from ..metrics import (
    certify_extension,
    comparison_sandwich,
    curvature_control_profile,
    default_grid,
    extend_metric,
)
from ..metrics.render import plot_profile
from ..utils import LoggingConfig, canonical_json, parse_json, read_text, to_jsonable, write_text
from .models import (
    AnalysisReport,
    CuspSummary,
    CurveReport,
    GraphSummary,
    ParabolicitySummary,
    RenderReport,
    SymmetrySummary,
    side_pairing_list,
)

logger = LoggingConfig.get_logger("src.cli.handler")


def load_shifts(path: str | Path) -> TickShifts:
    """Read a JSON object mapping dart ids to tick shifts."""
    source = "<stdin>" if str(path) == "-" else str(path)
    data = parse_json(read_text(path), source)
    if not isinstance(data, dict):
        raise InputError(f"{source}: shifts JSON must be an object keyed by dart id")
    try:
        return TickShifts.model_validate({"values": data})
    except ValidationError as e:
        first = e.errors()[0]
        field = ".".join(str(part) for part in first["loc"][1:]) or "<root>"
        raise InputError(f"{source}: field '{field}': {first['msg']}") from e


def cmd_analyze(
    path: str | Path,
    shifts_path: str | Path | None = None,
    render: str | Path | None = None,
) -> AnalysisReport:
    """Validate, trace, classify and solve one graph; optionally draw its polygon."""
    graph = read_graph(path)
    require_valid(graph)
    shifts = load_shifts(shifts_path) if shifts_path else TickShifts.zero()

    paths = trace_lht_paths(graph)
    group = symmetry_group(graph)
    symmetry = SymmetrySummary.model_validate(symmetry_report(graph, group))

    system = cusp_equations(graph).merge(symmetry_equalities(symmetry.corner_orbits))
    angles = solve_angles(system)
    surface_genus = genus(graph)
    flat_angles = solve_angles(system, flat=True) if surface_genus == 1 else None
    if flat_angles is None:
        logger.debug("Skipped flat angles", genus=surface_genus)

    polygon = assemble_polygon(graph, shifts)
    residuals = parabolicity_residuals(polygon)
    sums = check_shift_condition(graph, shifts)
    trace_tol = get_config().tolerances.trace
    parabolicity = ParabolicitySummary(
        residuals=[residuals[p] for p in paths],
        shift_sums=[sums[p] for p in paths],
        max_residual=max(residuals.values()),
        parabolic=all(value < trace_tol for value in residuals.values()),
    )
    sizes = cusp_sizes(graph)

    report = AnalysisReport(
        graph=GraphSummary(
            vertex_count=graph.vertex_count,
            edge_count=graph.edge_count,
            dart_count=graph.dart_count,
        ),
        cusps=CuspSummary(
            count=len(paths),
            lengths=sorted((p.length for p in paths), reverse=True),
            paths=[list(p.darts) for p in paths],
        ),
        euler_characteristic=euler_characteristic(graph),
        genus=surface_genus,
        symmetry=symmetry,
        angles=angles,
        flat_angles=flat_angles,
        cusp_sizes=[sizes[p] for p in paths],
        large_cusps=large_cusps(graph),
        parabolicity=parabolicity,
        side_pairings=side_pairing_list(polygon.pairing_matrices(), graph.twin),
    )
    if render:
        render_polygon(polygon, graph, render)
    logger.info(
        "Analyzed graph",
        vertices=graph.vertex_count,
        cusps=len(paths),
        genus=surface_genus,
        group_order=group.order,
    )
    return report


def cmd_gen(
    family: str,
    flips: list[int] | None = None,
    level: int | None = None,
    vertices: int | None = None,
    seed: int | None = None,
) -> RotationGraph:
    """Build one of the example graphs, a congruence graph or a random graph.

    Raises:
        DomainError: for a level below 2 or flipped vertices the base graph lacks.
    """
    if family == "random":
        if vertices is None:
            raise InputError("gen random needs --vertices")
        return random_rotation_graph(vertices, np.random.default_rng(seed))
    try:
        if family == "gamma-k":
            if level is None:
                raise InputError("gen gamma-k needs a level k")
            return platonic_graph(CongruenceLevel(k=level))
        pattern = FlipPattern(base=family, flipped_vertices=frozenset(flips or ()))
    except ValidationError as e:
        raise DomainError(e.errors()[0]["msg"]) from e
    return named_graph(pattern)


def cmd_render(
    path: str | Path, svg: str | Path, shifts_path: str | Path | None = None
) -> RenderReport:
    """Draw the fundamental polygon of a graph and report its side pairings."""
    graph = read_graph(path)
    shifts = load_shifts(shifts_path) if shifts_path else TickShifts.zero()
    polygon = assemble_polygon(graph, shifts)
    render_polygon(polygon, graph, svg)
    return RenderReport(
        svg=str(svg),
        triangles=len(polygon.triangles),
        side_pairings=side_pairing_list(polygon.pairing_matrices(), graph.twin),
    )


def cmd_metric(
    action: str,
    r0: float | None = None,
    eps: float | None = None,
    svg: str | Path | None = None,
) -> BaseModel | dict[str, Any]:
    """``extend`` certifies a fill-in, ``control`` builds a pinched profile, ``compare``
    checks the comparison sandwich."""
    grid = default_grid()
    if action == "extend":
        profile = extend_metric(0.5 if r0 is None else r0)
        report = certify_extension(profile, grid)
    elif action == "control":
        controlled = curvature_control_profile(0.1 if eps is None else eps, grid)
        profile, report = controlled.profile, controlled.report
    elif action == "compare":
        lower, upper = comparison_sandwich(0.1 if eps is None else eps, grid)
        return {
            "eps": 0.1 if eps is None else eps,
            "lower": lower,
            "upper": upper,
            "holds": lower.holds and upper.holds,
        }
    else:
        raise InputError(f"Unknown metric action '{action}'")
    if svg:
        plot_profile(profile, svg)
    return report


def _curve_report(name: str, curve: CuspCurve, certificate: BaseModel) -> CurveReport:
    return CurveReport(
        construction=name,
        pieces=[piece.model_dump(mode="json") for piece in curve.pieces],
        period=curve.period,
        enclosed_area=curve.enclosed_area,
        gauss_bonnet_total=gauss_bonnet_total(curve),
        certificate=certificate.model_dump(mode="json"),
    )


def cmd_curves(
    construction: str,
    r1: float | None = None,
    r2: float = 0.8,
    theta: float | None = None,
    svg: str | Path | None = None,
) -> CurveReport:
    """Build one of the obstruction curves and its certificate."""
    if construction == "slit":
        if r1 is None or theta is None:
            derived_r1, derived_theta = slit_parameters(r2)
            r1 = derived_r1 if r1 is None else r1
            theta = derived_theta if theta is None else theta
        curve, certificate = slit_horocycle(r1, r2, theta)
    elif construction == "convex":
        _, _, curve, certificate = convex_counterexample()
    elif construction == "noextend":
        curve, certificate = geodesic_horocycle_curve()
    else:
        raise InputError(f"Unknown curve construction '{construction}'")
    if svg:
        render_curve(curve, svg, title=construction)
    return _curve_report(construction, curve, certificate)


class CommandHandler:
    """Runs a parsed command, writes its report and maps failures to exit codes."""

    def __init__(self) -> None:
        self._commands: dict[str, Callable[[argparse.Namespace], Any]] = {
            "analyze": self._handle_analyze,
            "gen": self._handle_gen,
            "render": self._handle_render,
            "metric": self._handle_metric,
            "curves": self._handle_curves,
        }

    def handle(self, args: argparse.Namespace) -> int:
        """Run ``args.command``; return the process exit code."""
        command = self._commands.get(args.command)
        if command is None:
            sys.stderr.write(f"error: unknown command '{args.command}'\n")
            return InputError.exit_code
        logger.debug("Handling command", command=args.command)

        try:
            result = command(args)
        except GraphValidationError as e:
            logger.error("Graph failed validation", rules=e.report.rules())
            write_text(getattr(args, "output", None), canonical_json(e.report))
            sys.stderr.write(f"error: {e}\n")
            return e.exit_code
        except SurfaceError as e:
            logger.error("Command failed", command=args.command, error=str(e))
            sys.stderr.write(f"error: {e}\n")
            return e.exit_code
        except Exception as e:
            logger.error("Unexpected error", command=args.command, exc_info=True)
            sys.stderr.write(f"internal error: {e}\n")
            return 3

        self._emit(result, args)
        return 0

    def _emit(self, result: Any, args: argparse.Namespace) -> None:
        if isinstance(result, RotationGraph):
            text = canonical_json(graph_to_json(result))
        elif getattr(args, "report_format", "json") == "summary":
            text = _summary_text(to_jsonable(result))
        else:
            text = canonical_json(result)
        write_text(getattr(args, "output", None), text)

    def _handle_analyze(self, args: argparse.Namespace) -> AnalysisReport:
        return cmd_analyze(args.graph, shifts_path=args.shifts, render=args.svg)

    def _handle_gen(self, args: argparse.Namespace) -> RotationGraph:
        graph = cmd_gen(
            args.family,
            flips=list(itertools.chain.from_iterable(args.flips)),
            level=args.level,
            vertices=args.vertices,
            seed=args.seed,
        )
        report = validate(graph)
        if not report.ok:
            raise GraphValidationError(report)
        return graph

    def _handle_render(self, args: argparse.Namespace) -> RenderReport:
        return cmd_render(args.graph, args.svg, shifts_path=args.shifts)

    def _handle_metric(self, args: argparse.Namespace) -> Any:
        return cmd_metric(
            args.action,
            r0=getattr(args, "r0", None),
            eps=getattr(args, "eps", None),
            svg=args.svg,
        )

    def _handle_curves(self, args: argparse.Namespace) -> CurveReport:
        return cmd_curves(
            args.construction,
            r1=getattr(args, "R1", None),
            r2=getattr(args, "R2", 0.8),
            theta=getattr(args, "theta", None),
            svg=args.svg,
        )


def _summary_text(data: Any) -> str:
    """Top-level ``key: value`` lines; nested structures are reported by size."""
    if not isinstance(data, dict):
        return f"{data}\n"
    lines = []
    for key in sorted(data):
        value = data[key]
        if isinstance(value, dict):
            value = f"<{len(value)} fields>"
        elif isinstance(value, list):
            value = f"<{len(value)} items>"
        elif not isinstance(value, str):
            value = json.dumps(value)
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"
