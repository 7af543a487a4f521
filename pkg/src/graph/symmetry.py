"""Automorphisms and anti-automorphisms of rotation graphs.

A symmetry is determined by the image of a single flag: once the image of one
dart and the sign are fixed, the twin law and the (possibly reversed) rotation
law propagate the map to every dart of a connected graph. Enumerating all
``2 * |darts|`` targets of one source flag therefore finds the whole group.
"""

from collections import deque

import numpy as np

from ..errors import InternalConsistencyError, PreconditionError
from ..utils import LoggingConfig
from .core import require_valid
from .models import Flag, GraphMap, RotationGraph, Sign, SymmetryGroup

logger = LoggingConfig.get_logger("src.graph.symmetry")


def _propagate(
    source_graph: RotationGraph,
    target_graph: RotationGraph,
    source_dart: int,
    target_dart: int,
    sign: Sign,
) -> GraphMap | None:
    n = source_graph.dart_count
    if target_graph.dart_count != n:
        return None
    image = [-1] * n
    image[source_dart] = target_dart
    queue = deque([source_dart])

    if sign is Sign.PRESERVING:
        step_target = target_graph.rotation.__getitem__
    else:
        step_target = target_graph.rotation_inverse

    while queue:
        dart = queue.popleft()
        target = image[dart]
        for nxt, nxt_target in (
            (source_graph.rotation[dart], step_target(target)),
            (source_graph.twin[dart], target_graph.twin[target]),
        ):
            if image[nxt] == -1:
                image[nxt] = nxt_target
                queue.append(nxt)
            elif image[nxt] != nxt_target:
                return None

    if -1 in image or len(set(image)) != n:
        return None
    return GraphMap(dart_image=tuple(image), sign=sign)


def _check_flag(g: RotationGraph, flag: Flag) -> None:
    if not 0 <= flag.dart < g.dart_count or g.dart_vertex[flag.dart] != flag.vertex:
        raise PreconditionError(
            f"Flag (vertex={flag.vertex}, dart={flag.dart}) is not a valid flag"
        )


def extend_map(
    g: RotationGraph, source: Flag, target: Flag, sign: Sign = Sign.PRESERVING
) -> GraphMap | None:
    """Extend ``source -> target`` to a symmetry of ``g``, if one exists.

    Returns:
        The unique extension, or ``None`` when propagation reaches a contradiction.
    """
    require_valid(g)
    _check_flag(g, source)
    _check_flag(g, target)
    return _propagate(g, g, source.dart, target.dart, sign)


def find_isomorphism(
    g: RotationGraph, h: RotationGraph, sign: Sign = Sign.PRESERVING
) -> GraphMap | None:
    """Find a dart bijection from ``g`` to ``h`` respecting twins and (signed) rotations."""
    require_valid(g)
    require_valid(h)
    if g.dart_count != h.dart_count:
        return None
    for target in range(h.dart_count):
        candidate = _propagate(g, h, 0, target, sign)
        if candidate is not None:
            return candidate
    return None


def _verify_closure(g: RotationGraph, elements: list[GraphMap]) -> None:
    images = np.array([element.dart_image for element in elements], dtype=np.int64)
    signs = [element.sign for element in elements]
    known = {(row.tobytes(), sign) for row, sign in zip(images, signs, strict=True)}

    identity = np.arange(g.dart_count, dtype=np.int64)
    if (identity.tobytes(), Sign.PRESERVING) not in known:
        raise InternalConsistencyError("Symmetry group is missing the identity")

    for i, row in enumerate(images):
        # products[j] = elements[i] ∘ elements[j]
        products = row[images]
        for j, product in enumerate(products):
            if (product.tobytes(), signs[i] * signs[j]) not in known:
                raise InternalConsistencyError(
                    f"Symmetry group not closed: element {i} ∘ element {j} is missing"
                )
        inverse = np.empty_like(row)
        inverse[row] = identity
        if (inverse.tobytes(), signs[i]) not in known:
            raise InternalConsistencyError(f"Symmetry group has no inverse for element {i}")

    preserving = signs.count(Sign.PRESERVING)
    if len(elements) not in (preserving, 2 * preserving):
        raise InternalConsistencyError(
            f"Preserving maps ({preserving}) are not a subgroup of index 1 or 2 in {len(elements)}"
        )


def symmetry_group(g: RotationGraph) -> SymmetryGroup:
    """Enumerate all automorphisms and anti-automorphisms of ``g``.

    Raises:
        InternalConsistencyError: if the enumerated maps do not form a group.
    """
    require_valid(g)
    elements = []
    for sign in (Sign.PRESERVING, Sign.REVERSING):
        for target in range(g.dart_count):
            candidate = _propagate(g, g, 0, target, sign)
            if candidate is not None:
                elements.append(candidate)
    _verify_closure(g, elements)
    group = SymmetryGroup(elements=elements)
    logger.info(
        "Enumerated symmetry group",
        order=group.order,
        preserving_order=group.preserving_order,
    )
    return group


def corner_orbits(g: RotationGraph, grp: SymmetryGroup) -> list[list[int]]:
    """Orbits of the group acting on triangle corners (one corner per dart)."""
    parent = list(range(g.dart_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for element in grp.elements:
        for dart in range(g.dart_count):
            a, b = find(dart), find(element.corner_image(g, dart))
            if a != b:
                parent[max(a, b)] = min(a, b)

    blocks: dict[int, list[int]] = {}
    for dart in range(g.dart_count):
        blocks.setdefault(find(dart), []).append(dart)
    return sorted(blocks.values(), key=lambda block: block[0])


def _generated(generators: list[GraphMap], n: int) -> set[tuple[tuple[int, ...], Sign]]:
    identity = GraphMap(dart_image=tuple(range(n)))
    seen = {(identity.dart_image, identity.sign)}
    frontier = [identity]
    while frontier:
        nxt = []
        for element in frontier:
            for generator in generators:
                product = generator.compose(element)
                key = (product.dart_image, product.sign)
                if key not in seen:
                    seen.add(key)
                    nxt.append(product)
        frontier = nxt
    return seen


def symmetry_report(g: RotationGraph, grp: SymmetryGroup) -> dict[str, object]:
    """JSON-ready summary: orders, a greedy generating set and the corner orbits."""
    generators: list[GraphMap] = []
    covered = _generated(generators, g.dart_count)
    for element in grp.elements:
        if (element.dart_image, element.sign) not in covered:
            generators.append(element)
            covered = _generated(generators, g.dart_count)
        if len(covered) == grp.order:
            break
    return {
        "order": grp.order,
        "preserving_order": grp.preserving_order,
        "generators": [list(generator.dart_image) for generator in generators],
        "generator_signs": [generator.sign.value for generator in generators],
        "corner_orbits": corner_orbits(g, grp),
    }
