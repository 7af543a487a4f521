"""Data models for 3-regular graphs with orientation and their symmetries."""

from enum import Enum
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator


class Dart(BaseModel):
    """A half-edge: the pair (vertex, edge) it emanates from."""

    model_config = ConfigDict(frozen=True)

    id: int = Field(..., ge=0, description="Dense dart index")
    vertex: int = Field(..., ge=0, description="Vertex the dart emanates from")


class RotationGraph(BaseModel):
    """A 3-regular graph with a cyclic edge order at every vertex.

    ``rotation[d]`` is the next dart counterclockwise at the same vertex and
    ``twin[d]`` is the other half of the edge of ``d``. The model only checks
    field types; the combinatorial invariants are checked by
    :func:`src.graph.core.validate`, which reports violations as data.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    vertex_count: int = Field(..., description="Number of vertices")
    twin: tuple[int, ...] = Field(..., description="Edge involution, dart-indexed")
    rotation: tuple[int, ...] = Field(..., description="Counterclockwise successor at a vertex")
    dart_vertex: tuple[int, ...] = Field(..., description="Vertex of every dart")

    @property
    def dart_count(self) -> int:
        return len(self.rotation)

    @property
    def edge_count(self) -> int:
        return self.dart_count // 2

    @property
    def darts(self) -> list[Dart]:
        return [Dart(id=d, vertex=v) for d, v in enumerate(self.dart_vertex)]

    def rotation_inverse(self, dart: int) -> int:
        """Return the dart preceding ``dart`` in its rotation cycle."""
        return self.rotation[self.rotation[dart]]

    def vertex_darts(self, vertex: int) -> tuple[int, int, int]:
        """Return the rotation cycle of ``vertex`` starting at its smallest dart."""
        first = min(d for d, v in enumerate(self.dart_vertex) if v == vertex)
        second = self.rotation[first]
        return first, second, self.rotation[second]

    def local_index(self, dart: int) -> int:
        """Position of ``dart`` in its vertex's rotation cycle, counted from the smallest dart."""
        return self.vertex_darts(self.dart_vertex[dart]).index(dart)


class Violation(BaseModel):
    """One failed validation rule with the offending ids."""

    rule: str
    ids: list[int] = Field(default_factory=list)
    message: str = ""


class ValidationReport(BaseModel):
    """Result of validating a rotation graph. Errors are data, not exceptions."""

    violations: list[Violation] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def ok(self) -> bool:
        return not self.violations

    def rules(self) -> set[str]:
        return {violation.rule for violation in self.violations}


class LhtPath(BaseModel):
    """A left-hand-turn path: one cusp of the surface."""

    model_config = ConfigDict(frozen=True)

    darts: tuple[int, ...] = Field(..., description="Cyclic dart sequence starting at its minimum")

    @computed_field  # type: ignore[prop-decorator]
    @property
    def length(self) -> int:
        return len(self.darts)


class Flag(BaseModel):
    """A vertex together with a dart emanating from it."""

    model_config = ConfigDict(frozen=True)

    vertex: int
    dart: int


class Sign(str, Enum):
    """Whether a graph map keeps or reverses the cyclic orders."""

    PRESERVING = "preserving"
    REVERSING = "reversing"

    def __mul__(self, other: "Sign") -> "Sign":  # type: ignore[override]
        if self is other:
            return Sign.PRESERVING
        return Sign.REVERSING


class GraphMap(BaseModel):
    """A graph symmetry given as an explicit dart bijection."""

    model_config = ConfigDict(frozen=True)

    dart_image: tuple[int, ...]
    sign: Sign = Sign.PRESERVING

    def __call__(self, dart: int) -> int:
        return self.dart_image[dart]

    @property
    def is_identity(self) -> bool:
        return self.sign is Sign.PRESERVING and all(
            image == dart for dart, image in enumerate(self.dart_image)
        )

    def compose(self, other: "GraphMap") -> "GraphMap":
        """Return ``self ∘ other`` (apply ``other`` first)."""
        return GraphMap(
            dart_image=tuple(self.dart_image[d] for d in other.dart_image),
            sign=self.sign * other.sign,
        )

    def inverse(self) -> "GraphMap":
        image = [0] * len(self.dart_image)
        for dart, target in enumerate(self.dart_image):
            image[target] = dart
        return GraphMap(dart_image=tuple(image), sign=self.sign)

    def order(self) -> int:
        """Smallest positive power of the map that is the identity."""
        power = self
        count = 1
        while not power.is_identity:
            power = power.compose(self)
            count += 1
        return count

    def corner_image(self, graph: RotationGraph, dart: int) -> int:
        """Image of the triangle corner of ``dart``.

        The corner of ``d`` lies between the sides of ``d`` and ``rotation(d)``;
        a reversing map swaps the two bounding sides.
        """
        image = self.dart_image[dart]
        if self.sign is Sign.PRESERVING:
            return image
        return graph.rotation_inverse(image)


class SymmetryGroup(BaseModel):
    """All automorphisms and anti-automorphisms of a rotation graph."""

    elements: list[GraphMap]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def order(self) -> int:
        return len(self.elements)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def preserving_order(self) -> int:
        return sum(1 for element in self.elements if element.sign is Sign.PRESERVING)


BASE_VERTEX_COUNTS: dict[str, int] = {"theta": 2, "tetrahedron": 4, "cube": 8}


class FlipPattern(BaseModel):
    """A named base graph with the set of vertices whose orientation is reversed."""

    model_config = ConfigDict(frozen=True)

    base: Literal["theta", "tetrahedron", "cube"]
    flipped_vertices: frozenset[int] = Field(default_factory=frozenset)

    @model_validator(mode="after")
    def _check_vertices(self) -> "FlipPattern":
        limit = BASE_VERTEX_COUNTS[self.base]
        bad = sorted(v for v in self.flipped_vertices if not 0 <= v < limit)
        if bad:
            raise ValueError(f"{self.base} has vertices 0..{limit - 1}; cannot flip {bad}")
        return self


class CongruenceLevel(BaseModel):
    """Level ``k`` of the principal congruence subgroup."""

    model_config = ConfigDict(frozen=True)

    k: int = Field(..., ge=2)
