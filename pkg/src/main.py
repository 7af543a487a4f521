"""Command-line entry point for the trivalent surfaces toolkit."""

import argparse
import sys

from .cli import CommandHandler
from .config import get_config
from .graph.models import BASE_VERTEX_COUNTS
from .utils import LoggingConfig

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


def _vertex_list(text: str) -> list[int]:
    """Parse ``"0,6"`` into ``[0, 6]``."""
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected vertex ids like 0,6; got '{text}'") from e


def _add_output(parser: argparse.ArgumentParser, svg_help: str | None = None) -> None:
    parser.add_argument(
        "-o", "--output", "--report", help="Write the report here instead of stdout"
    )
    formats = parser.add_mutually_exclusive_group()
    formats.add_argument(
        "--json",
        dest="report_format",
        action="store_const",
        const="json",
        help="Emit the canonical JSON report (default)",
    )
    formats.add_argument(
        "--summary",
        dest="report_format",
        action="store_const",
        const="summary",
        help="Emit top-level key: value lines instead of JSON",
    )
    parser.set_defaults(report_format="json")
    if svg_help:
        parser.add_argument("--svg", "--plot", dest="svg", help=svg_help)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="surface",
        description="Hyperbolic surfaces from 3-regular graphs with orientation.",
    )
    parser.add_argument("--log-level", choices=LOG_LEVELS, type=str.upper)
    parser.add_argument("--log-format", choices=["console", "json"])
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", help="Invariants, symmetries and angles of a graph")
    analyze.add_argument("graph", help="Graph JSON file, or - for stdin")
    analyze.add_argument("--shifts", help="JSON object of tick shifts keyed by dart id")
    analyze.add_argument("--svg", "--render", dest="svg", help="Also draw the fundamental polygon")
    _add_output(analyze)

    gen = commands.add_parser("gen", help="Emit a graph as JSON")
    gen.add_argument("family", choices=[*BASE_VERTEX_COUNTS, "gamma-k", "random"])
    gen.add_argument("level", nargs="?", type=int, help="Congruence level k for gamma-k")
    gen.add_argument(
        "--flips",
        "--flip",
        dest="flips",
        type=_vertex_list,
        nargs="+",
        action="extend",
        default=[],
        help="Vertices to reverse, e.g. --flips 0,6",
    )
    gen.add_argument("--vertices", type=int, help="Vertex count for random graphs")
    gen.add_argument("--seed", type=int, help="Seed for random graphs")
    gen.add_argument("-o", "--output", help="Write the graph here instead of stdout")

    render = commands.add_parser("render", help="Draw the fundamental polygon of a graph")
    render.add_argument("graph", help="Graph JSON file, or - for stdin")
    render.add_argument(
        "-o", "--output", "--svg", dest="svg", required=True, help="Output SVG path"
    )
    render.add_argument("--shifts", help="JSON object of tick shifts keyed by dart id")

    metric = commands.add_parser("metric", help="Radial metrics on the punctured disk")
    metric_actions = metric.add_subparsers(dest="action", required=True)
    extend = metric_actions.add_parser("extend", help="Negatively curved fill-in inside r0")
    extend.add_argument("--r0", type=float, default=0.5)
    _add_output(extend, svg_help="Plot the profile and its curvature")
    for name, text in (
        ("control", "Profile with curvature pinched to [-(1+eps), -1/(1+eps)]"),
        ("compare", "Check the (1+eps) comparison sandwich"),
    ):
        action = metric_actions.add_parser(name, help=text)
        action.add_argument("--eps", type=float, default=0.1)
        _add_output(action, svg_help="Plot the profile and its curvature")

    curves = commands.add_parser("curves", help="Obstruction curves around a cusp")
    constructions = curves.add_subparsers(dest="construction", required=True)
    slit = constructions.add_parser("slit", help="Horocycle with a slit")
    slit.add_argument("--R2", type=float, default=0.8)
    slit.add_argument("--R1", type=float, help="Defaults to u(R1) = u(R2) + 0.1")
    slit.add_argument("--theta", type=float, help="Defaults to area 2*pi + 0.5")
    _add_output(slit, svg_help="Draw the curve in the strip and in the punctured disk")
    for name, text in (
        ("convex", "Convex curve with total curvature above 2*pi"),
        ("noextend", "Geodesic-plus-horocycle curve with no fill-in"),
    ):
        construction = constructions.add_parser(name, help=text)
        _add_output(construction, svg_help="Draw the curve in the strip and in the punctured disk")

    return parser


def main(argv: list[str] | None = None) -> int:
    """Parse arguments, configure logging and run the command."""
    args = build_parser().parse_args(argv)
    settings = get_config().logging
    LoggingConfig.setup(
        level=args.log_level or settings.level,
        format=args.log_format or settings.format,
        file=settings.file,
    )
    logger = LoggingConfig.get_logger("src.main")
    logger.debug("Starting command", command=args.command)
    return CommandHandler().handle(args)


if __name__ == "__main__":
    sys.exit(main())
