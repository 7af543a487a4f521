"""Rotation-graph validation, left-hand-turn tracing, Euler characteristic and genus."""

from collections import Counter, deque
from functools import lru_cache
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from ..errors import GraphValidationError, InputError, InternalConsistencyError
from ..utils import LoggingConfig
from ..utils.serialization import canonical_json, parse_json, read_text, write_text
from .models import LhtPath, RotationGraph, ValidationReport, Violation

logger = LoggingConfig.get_logger("src.graph.core")


def _permutation_defects(perm: tuple[int, ...]) -> list[int]:
    """Darts whose image is out of range or hit more than once."""
    n = len(perm)
    seen: dict[int, int] = {}
    bad: set[int] = set()
    for dart, image in enumerate(perm):
        if not 0 <= image < n:
            bad.add(dart)
        elif image in seen:
            bad.update((dart, seen[image]))
        else:
            seen[image] = dart
    return sorted(bad)


def _cycles(perm: tuple[int, ...]) -> list[list[int]]:
    visited = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if visited[start]:
            continue
        cycle = []
        dart = start
        while not visited[dart]:
            visited[dart] = True
            cycle.append(dart)
            dart = perm[dart]
        cycles.append(cycle)
    return cycles


def validate(g: RotationGraph) -> ValidationReport:
    """Check every rotation-graph invariant and report all violations."""
    violations: list[Violation] = []
    n = len(g.rotation)

    if len(g.twin) != n or len(g.dart_vertex) != n:
        violations.append(
            Violation(
                rule="array-lengths",
                ids=[n, len(g.twin), len(g.dart_vertex)],
                message="rotation, twin and dart_vertex must have equal length",
            )
        )
        return ValidationReport(violations=violations)

    counts_match = g.vertex_count >= 1 and n == 3 * g.vertex_count
    if not counts_match:
        violations.append(
            Violation(
                rule="dart-count",
                ids=[n],
                message=f"expected {3 * g.vertex_count} darts for {g.vertex_count} vertices",
            )
        )

    out_of_range = [d for d, v in enumerate(g.dart_vertex) if not 0 <= v < g.vertex_count]
    if out_of_range:
        violations.append(Violation(rule="dart-vertex-range", ids=out_of_range))

    broken = False
    for name, perm in (("rotation", g.rotation), ("twin", g.twin)):
        defects = _permutation_defects(perm)
        if defects:
            broken = True
            violations.append(
                Violation(rule="permutation", ids=defects, message=f"{name} is not a permutation")
            )
    if broken:
        return ValidationReport(violations=violations)

    twin_bad = [d for d in range(n) if g.twin[d] == d or g.twin[g.twin[d]] != d]
    if twin_bad:
        violations.append(Violation(rule="twin-involution", ids=twin_bad))

    short_or_long: list[int] = []
    mixed: list[int] = []
    for cycle in _cycles(g.rotation):
        if len(cycle) != 3:
            short_or_long.extend(cycle)
        if not out_of_range and len({g.dart_vertex[d] for d in cycle}) != 1:
            mixed.extend(cycle)
    if short_or_long:
        violations.append(Violation(rule="rotation-3-cycles", ids=sorted(short_or_long)))

    if not out_of_range:
        degree = Counter(g.dart_vertex)
        mixed.extend(d for d, v in enumerate(g.dart_vertex) if degree[v] != 3)
        if mixed:
            violations.append(
                Violation(
                    rule="rotation-vertex",
                    ids=sorted(set(mixed)),
                    message="every vertex must own exactly one rotation 3-cycle",
                )
            )
        # Per-vertex passes only run once the vertex count is backed by darts.
        if counts_match and not twin_bad:
            unreached = _unreached_vertices(g)
            if unreached:
                violations.append(Violation(rule="connected", ids=unreached))

    return ValidationReport(violations=violations)


def _unreached_vertices(g: RotationGraph) -> list[int]:
    by_vertex: dict[int, list[int]] = {}
    for dart, vertex in enumerate(g.dart_vertex):
        by_vertex.setdefault(vertex, []).append(dart)
    seen = {0}
    queue = deque([0])
    while queue:
        vertex = queue.popleft()
        for dart in by_vertex.get(vertex, []):
            neighbour = g.dart_vertex[g.twin[dart]]
            if neighbour not in seen:
                seen.add(neighbour)
                queue.append(neighbour)
    return [v for v in range(g.vertex_count) if v not in seen]


def require_valid(g: RotationGraph) -> None:
    """Raise :class:`GraphValidationError` unless ``g`` is a valid rotation graph."""
    report = validate(g)
    if not report.ok:
        logger.error("Rejected invalid graph", rules=sorted(report.rules()))
        raise GraphValidationError(report)


def successor(g: RotationGraph, dart: int) -> int:
    """Next dart of the left-hand-turn path through ``dart``."""
    return g.rotation[g.twin[dart]]


@lru_cache(maxsize=256)
def _trace(g: RotationGraph) -> tuple[LhtPath, ...]:
    require_valid(g)
    visited = [False] * g.dart_count
    paths = []
    for start in range(g.dart_count):
        if visited[start]:
            continue
        darts = []
        dart = start
        while not visited[dart]:
            visited[dart] = True
            darts.append(dart)
            dart = successor(g, dart)
        # Scanning in id order means every orbit starts at its minimal dart
        paths.append(LhtPath(darts=tuple(darts)))
    paths.sort(key=lambda path: (path.length, path.darts[0]))
    logger.debug("Traced left-hand-turn paths", path_count=len(paths), darts=g.dart_count)
    return tuple(paths)


def trace_lht_paths(g: RotationGraph) -> list[LhtPath]:
    """Partition the darts into left-hand-turn paths.

    Paths are orbits of ``succ(d) = rotation(twin(d))``, each rotated to start at
    its minimal dart and sorted by ``(length, first dart)``.

    Raises:
        GraphValidationError: if ``g`` is not a valid rotation graph.
    """
    return list(_trace(g))


def cusp_count(g: RotationGraph) -> int:
    return len(_trace(g))


def edge_count(g: RotationGraph) -> int:
    return g.edge_count


def euler_characteristic(g: RotationGraph) -> int:
    """Return ``N_lht - N_v/2``."""
    n_lht = cusp_count(g)
    if g.vertex_count % 2:
        raise InternalConsistencyError(
            f"A 3-regular graph cannot have an odd vertex count ({g.vertex_count})"
        )
    return n_lht - g.vertex_count // 2


def genus(g: RotationGraph) -> int:
    """Return ``1 + (N_v - 2 N_lht) / 4``.

    Raises:
        InternalConsistencyError: if the formula does not give a non-negative integer.
    """
    numerator = g.vertex_count - 2 * cusp_count(g)
    if numerator % 4 or numerator < -4:
        raise InternalConsistencyError(
            f"Genus formula gives 1 + {numerator}/4 for {g.vertex_count} vertices, "
            f"{cusp_count(g)} cusps"
        )
    return 1 + numerator // 4


def mirror(g: RotationGraph) -> RotationGraph:
    """Reverse the cyclic order at every vertex."""
    inverse = [0] * g.dart_count
    for dart, image in enumerate(g.rotation):
        inverse[image] = dart
    return g.model_copy(update={"rotation": tuple(inverse)})


def graph_to_json(g: RotationGraph) -> dict[str, Any]:
    return {
        "vertex_count": g.vertex_count,
        "twin": list(g.twin),
        "rotation": list(g.rotation),
        "dart_vertex": list(g.dart_vertex),
    }


def graph_from_json(data: Any, source: str = "<input>") -> RotationGraph:
    """Build a graph from parsed JSON, reporting the offending field on schema errors."""
    if not isinstance(data, dict):
        raise InputError(f"{source}: graph JSON must be an object")
    try:
        return RotationGraph.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        field = ".".join(str(part) for part in first["loc"]) or "<root>"
        raise InputError(f"{source}: field '{field}': {first['msg']}") from e


def read_graph(path: str | Path) -> RotationGraph:
    """Read a graph JSON file; ``-`` reads standard input."""
    source = "<stdin>" if str(path) == "-" else str(path)
    graph = graph_from_json(parse_json(read_text(path), source), source)
    logger.info("Loaded graph", source=source, vertices=graph.vertex_count)
    return graph


def write_graph(g: RotationGraph, path: str | Path | None) -> None:
    write_text(path, canonical_json(graph_to_json(g)))
