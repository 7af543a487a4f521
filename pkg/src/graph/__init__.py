"""Rotation graphs: validation, face tracing, symmetries and generators."""

from .core import (
    cusp_count,
    euler_characteristic,
    genus,
    graph_from_json,
    graph_to_json,
    mirror,
    read_graph,
    require_valid,
    trace_lht_paths,
    validate,
    write_graph,
)
from .generators import from_rotation_lists, named_graph, platonic_graph, random_rotation_graph
from .models import (
    CongruenceLevel,
    Dart,
    Flag,
    FlipPattern,
    GraphMap,
    LhtPath,
    RotationGraph,
    Sign,
    SymmetryGroup,
    ValidationReport,
    Violation,
)
from .symmetry import corner_orbits, extend_map, find_isomorphism, symmetry_group, symmetry_report

__all__ = [
    "CongruenceLevel",
    "Dart",
    "Flag",
    "FlipPattern",
    "GraphMap",
    "LhtPath",
    "RotationGraph",
    "Sign",
    "SymmetryGroup",
    "ValidationReport",
    "Violation",
    "corner_orbits",
    "cusp_count",
    "euler_characteristic",
    "extend_map",
    "find_isomorphism",
    "from_rotation_lists",
    "genus",
    "graph_from_json",
    "graph_to_json",
    "mirror",
    "named_graph",
    "platonic_graph",
    "random_rotation_graph",
    "read_graph",
    "require_valid",
    "symmetry_group",
    "symmetry_report",
    "trace_lht_paths",
    "validate",
    "write_graph",
]
