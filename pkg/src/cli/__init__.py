"""Command-line surface: report models and command dispatch."""

from .handler import (
    CommandHandler,
    cmd_analyze,
    cmd_curves,
    cmd_gen,
    cmd_metric,
    cmd_render,
    load_shifts,
)
from .models import (
    AnalysisReport,
    CurveReport,
    CuspSummary,
    GraphSummary,
    ParabolicitySummary,
    RenderReport,
    SidePairing,
    SymmetrySummary,
)

__all__ = [
    "AnalysisReport",
    "CommandHandler",
    "CurveReport",
    "CuspSummary",
    "GraphSummary",
    "ParabolicitySummary",
    "RenderReport",
    "SidePairing",
    "SymmetrySummary",
    "cmd_analyze",
    "cmd_curves",
    "cmd_gen",
    "cmd_metric",
    "cmd_render",
    "load_shifts",
]
