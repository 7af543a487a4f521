"""Example graphs: theta, tetrahedron and cube with flips, Γ(k) graphs and random graphs."""

import itertools
from collections.abc import Hashable, Sequence

import numpy as np

from ..config import get_config
from ..errors import DomainError, InternalConsistencyError
from ..utils import LoggingConfig
from .core import validate
from .models import CongruenceLevel, FlipPattern, RotationGraph

logger = LoggingConfig.get_logger("src.graph.generators")

# Counterclockwise edge labels around each vertex, seen from outside the surface
BASE_ROTATIONS: dict[str, list[list[Hashable]]] = {
    "theta": [["a", "b", "c"], ["a", "c", "b"]],
    "tetrahedron": [
        [(0, 1), (0, 3), (0, 2)],
        [(1, 2), (1, 3), (0, 1)],
        [(0, 2), (2, 3), (1, 2)],
        [(0, 3), (1, 3), (2, 3)],
    ],
    "cube": [
        [(0, 1), (0, 4), (0, 3)],
        [(1, 2), (1, 5), (0, 1)],
        [(2, 3), (2, 6), (1, 2)],
        [(0, 3), (3, 7), (2, 3)],
        [(4, 5), (4, 7), (0, 4)],
        [(5, 6), (4, 5), (1, 5)],
        [(2, 6), (6, 7), (5, 6)],
        [(6, 7), (3, 7), (4, 7)],
    ],
}


def from_rotation_lists(lists: Sequence[Sequence[Hashable]]) -> RotationGraph:
    """Build a graph from per-vertex counterclockwise lists of edge labels.

    Every label must occur exactly twice overall; a label repeated at one
    vertex is a loop. Darts are numbered vertex by vertex in list order.
    """
    ends: dict[Hashable, list[int]] = {}
    rotation: list[int] = []
    dart_vertex: list[int] = []
    for vertex, labels in enumerate(lists):
        if len(labels) != 3:
            raise DomainError(f"Vertex {vertex} has degree {len(labels)}, expected 3")
        base = 3 * vertex
        for offset, label in enumerate(labels):
            ends.setdefault(label, []).append(base + offset)
            rotation.append(base + (offset + 1) % 3)
            dart_vertex.append(vertex)

    twin = [0] * len(rotation)
    for label, darts in ends.items():
        if len(darts) != 2:
            raise DomainError(f"Edge {label!r} has {len(darts)} ends, expected 2")
        twin[darts[0]], twin[darts[1]] = darts[1], darts[0]

    return RotationGraph(
        vertex_count=len(lists),
        twin=tuple(twin),
        rotation=tuple(rotation),
        dart_vertex=tuple(dart_vertex),
    )


def named_graph(pattern: FlipPattern) -> RotationGraph:
    """Base polyhedral rotation system with the cyclic order reversed at flipped vertices."""
    lists = [
        list(reversed(labels)) if vertex in pattern.flipped_vertices else list(labels)
        for vertex, labels in enumerate(BASE_ROTATIONS[pattern.base])
    ]
    graph = from_rotation_lists(lists)
    logger.debug("Built named graph", base=pattern.base, flips=sorted(pattern.flipped_vertices))
    return graph


# Images of z -> -1/z and of its order-3 product with z -> z + 1
_S = ((0, -1), (1, 0))
_R = ((-1, 1), (-1, 0))

Matrix = tuple[int, int, int, int]


def _canonical(m: Matrix, k: int) -> Matrix:
    a, b, c, d = (x % k for x in m)
    negated = ((-a) % k, (-b) % k, (-c) % k, (-d) % k)
    return min((a, b, c, d), negated)


def _left_multiply(left: tuple[tuple[int, int], tuple[int, int]], m: Matrix, k: int) -> Matrix:
    (p, q), (r, s) = left
    a, b, c, d = m
    return _canonical((p * a + q * c, p * b + q * d, r * a + s * c, r * b + s * d), k)


def psl2_elements(k: int) -> list[Matrix]:
    """All elements of PSL(2, Z/k), each as its canonical representative (a, b, c, d)."""
    elements = {
        _canonical(m, k)
        for m in itertools.product(range(k), repeat=4)
        if (m[0] * m[3] - m[1] * m[2]) % k == 1 % k
    }
    return sorted(elements)


def platonic_graph(level: CongruenceLevel) -> RotationGraph:
    """The dual Platonic graph of Γ(k).

    Darts are elements g of PSL(2, Z/k); rotation is g -> R g, twin is
    g -> S g and vertices are the cosets <R> g. Every left-hand-turn path has
    length k because R S acts as the translation z -> z + 1.

    Raises:
        DomainError: if ``k`` exceeds the configured enumeration limit.
    """
    k = level.k
    limit = get_config().generators.max_congruence_level
    if k > limit:
        raise DomainError(f"Congruence level {k} exceeds the enumeration limit {limit}")

    elements = psl2_elements(k)
    index = {m: i for i, m in enumerate(elements)}
    rotation = [index[_left_multiply(_R, m, k)] for m in elements]
    twin = [index[_left_multiply(_S, m, k)] for m in elements]

    dart_vertex = [-1] * len(elements)
    vertex_count = 0
    for dart in range(len(elements)):
        if dart_vertex[dart] != -1:
            continue
        current = dart
        while dart_vertex[current] == -1:
            dart_vertex[current] = vertex_count
            current = rotation[current]
        vertex_count += 1

    graph = RotationGraph(
        vertex_count=vertex_count,
        twin=tuple(twin),
        rotation=tuple(rotation),
        dart_vertex=tuple(dart_vertex),
    )
    logger.info("Built congruence graph", k=k, group_order=len(elements), vertices=vertex_count)
    return graph


def random_rotation_graph(
    vertex_count: int, rng: np.random.Generator, max_attempts: int = 1000
) -> RotationGraph:
    """A random connected 3-regular rotation graph (loops and multi-edges allowed).

    Darts are paired by a uniformly random perfect matching; graphs that come
    out disconnected are redrawn.
    """
    if vertex_count < 2 or vertex_count % 2:
        raise DomainError(f"A 3-regular graph needs an even vertex count >= 2, got {vertex_count}")
    n = 3 * vertex_count
    rotation = tuple(3 * (d // 3) + (d + 1) % 3 for d in range(n))
    dart_vertex = tuple(d // 3 for d in range(n))

    for attempt in range(1, max_attempts + 1):
        order = rng.permutation(n)
        twin = [0] * n
        for a, b in zip(order[0::2], order[1::2], strict=True):
            twin[int(a)], twin[int(b)] = int(b), int(a)
        graph = RotationGraph(
            vertex_count=vertex_count, twin=tuple(twin), rotation=rotation, dart_vertex=dart_vertex
        )
        if validate(graph).ok:
            logger.debug("Drew random graph", vertices=vertex_count, attempts=attempt)
            return graph
    raise InternalConsistencyError(
        f"No connected graph with {vertex_count} vertices after {max_attempts} draws"
    )
