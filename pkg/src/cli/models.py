"""Report models emitted by the command line."""

from pydantic import BaseModel, Field, model_validator

from ..analysis import AngleSolution


class GraphSummary(BaseModel):
    """Size of the rotation graph."""

    vertex_count: int = Field(..., description="Number of vertices (ideal triangles)")
    edge_count: int = Field(..., description="Number of edges")
    dart_count: int = Field(..., description="Number of darts")


class CuspSummary(BaseModel):
    """Left-hand-turn paths, one per cusp."""

    count: int
    lengths: list[int] = Field(..., description="Path lengths in decreasing order")
    paths: list[list[int]] = Field(..., description="Dart sequence of every path")


class SymmetrySummary(BaseModel):
    """Orientation-preserving and -reversing automorphisms."""

    order: int
    preserving_order: int
    generators: list[list[int]]
    generator_signs: list[str]
    corner_orbits: list[list[int]]


class ParabolicitySummary(BaseModel):
    """Cycle-transform traces of the assembled fundamental polygon."""

    residuals: list[float] = Field(..., description="| |trace| - 2 | per cusp, in path order")
    shift_sums: list[float] = Field(..., description="Total shear per cusp")
    max_residual: float
    parabolic: bool


class SidePairing(BaseModel):
    """Pairing carrying the side of ``twin(dart)`` onto the side of ``dart``."""

    dart: int
    partner: int
    matrix: list[list[float]] = Field(..., description="Row-major, determinant 1")


def side_pairing_list(
    matrices: dict[int, list[list[float]]], twin: tuple[int, ...]
) -> list[SidePairing]:
    return [
        SidePairing(dart=dart, partner=twin[dart], matrix=matrix)
        for dart, matrix in matrices.items()
    ]


class RenderReport(BaseModel):
    """What ``render`` drew."""

    svg: str
    triangles: int
    side_pairings: list[SidePairing]


class AnalysisReport(BaseModel):
    """Everything ``analyze`` computes for one graph."""

    graph: GraphSummary
    cusps: CuspSummary
    euler_characteristic: int
    genus: int
    symmetry: SymmetrySummary
    angles: AngleSolution
    flat_angles: AngleSolution | None = Field(
        None, description="Flat solution; only computed on genus-1 surfaces"
    )
    cusp_sizes: list[float]
    large_cusps: bool
    parabolicity: ParabolicitySummary
    side_pairings: list[SidePairing] = Field(
        default_factory=list, description="Side pairings of the fundamental polygon"
    )

    @model_validator(mode="after")
    def _consistent(self) -> "AnalysisReport":
        chi = self.cusps.count - self.graph.vertex_count // 2
        if self.euler_characteristic != chi or chi != 2 - 2 * self.genus:
            raise ValueError(
                f"chi={self.euler_characteristic} disagrees with N_lht - N_v/2 = {chi} "
                f"or genus {self.genus}"
            )
        return self


class CurveReport(BaseModel):
    """A constructed curve together with its certificate."""

    construction: str
    pieces: list[dict]
    period: float
    enclosed_area: float
    gauss_bonnet_total: float
    certificate: dict
