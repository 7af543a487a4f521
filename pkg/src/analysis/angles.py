"""Cusp angle equations, symmetry equalities and their exact solution.

Each dart names one triangle corner and one angle variable. Right-hand sides
are stored as rational multiples of pi, so elimination is exact and floats
appear only in the reported radians.
"""

import math
from enum import Enum
from fractions import Fraction
from typing import Annotated, Any

from pydantic import BaseModel, Field, PlainSerializer, PlainValidator, computed_field

from ..config import get_config
from ..errors import InternalConsistencyError, PreconditionError
from ..graph.core import genus, trace_lht_paths
from ..graph.models import RotationGraph
from ..utils import LoggingConfig

logger = LoggingConfig.get_logger("src.analysis.angles")


def _to_fraction(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, int | str):
        raise ValueError(f"expected an integer or 'p/q' string, got {value!r}")
    return Fraction(value)


Rational = Annotated[
    Fraction,
    PlainValidator(_to_fraction),
    PlainSerializer(str, return_type=str),
]


class Equation(BaseModel):
    """``sum(coeff * angle[dart]) = rhs_pi * pi``."""

    terms: dict[int, Rational]
    rhs_pi: Rational


class LinearSystem(BaseModel):
    """A rational linear system in the corner angles."""

    variables: list[int] = Field(default_factory=list)
    equations: list[Equation] = Field(default_factory=list)
    triangles: list[tuple[int, int, int]] = Field(
        default_factory=list, description="Corner triples, one per vertex"
    )
    genus: int | None = None
    cusp_count: int | None = None

    def merge(self, other: "LinearSystem") -> "LinearSystem":
        """Concatenate two systems; graph provenance is taken from whichever has it."""
        return LinearSystem(
            variables=sorted(set(self.variables) | set(other.variables)),
            equations=[*self.equations, *other.equations],
            triangles=self.triangles or other.triangles,
            genus=self.genus if self.genus is not None else other.genus,
            cusp_count=self.cusp_count if self.cusp_count is not None else other.cusp_count,
        )


class SolutionStatus(str, Enum):
    UNIQUE = "unique"
    UNDERDETERMINED = "underdetermined"
    INCONSISTENT = "inconsistent"


class AngleSolution(BaseModel):
    """Outcome of solving a corner-angle system.

    For an underdetermined system the values are the minimum-norm particular
    solution and ``nullity`` counts the free directions.
    """

    status: SolutionStatus
    values: dict[int, float] = Field(default_factory=dict, description="Radians")
    exact: dict[int, Rational] = Field(default_factory=dict, description="Multiples of pi")
    nullity: int = 0
    residual: float = 0.0
    flat: bool = False

    @computed_field  # type: ignore[prop-decorator]
    @property
    def admissible(self) -> bool:
        """Whether every angle lies strictly between 0 and pi."""
        return bool(self.values) and all(0 < value < math.pi for value in self.values.values())


def cusp_equations(g: RotationGraph) -> LinearSystem:
    """One equation per left-hand-turn path: its corners add up to 2 pi.

    The path ``(d_0, ..., d_{n-1})`` meets the corners ``twin(d_k)``.
    """
    paths = trace_lht_paths(g)
    equations = []
    for path in paths:
        terms: dict[int, Fraction] = {}
        for dart in path.darts:
            corner = g.twin[dart]
            terms[corner] = terms.get(corner, Fraction(0)) + 1
        equations.append(Equation(terms=terms, rhs_pi=Fraction(2)))
    triangles = [g.vertex_darts(vertex) for vertex in range(g.vertex_count)]
    logger.debug("Built cusp equations", equations=len(equations))
    return LinearSystem(
        variables=list(range(g.dart_count)),
        equations=equations,
        triangles=triangles,
        genus=genus(g),
        cusp_count=len(paths),
    )


def symmetry_equalities(orbits: list[list[int]]) -> LinearSystem:
    """Equalities ``c_1 - c_i = 0`` inside every corner orbit."""
    equations = []
    variables: set[int] = set()
    for orbit in orbits:
        variables.update(orbit)
        first = orbit[0]
        for other in orbit[1:]:
            equations.append(
                Equation(terms={first: Fraction(1), other: Fraction(-1)}, rhs_pi=Fraction(0))
            )
    return LinearSystem(variables=sorted(variables), equations=equations)


def _row_reduce(
    rows: list[list[Fraction]], rhs: list[Fraction]
) -> tuple[list[list[Fraction]], list[Fraction], list[int], bool]:
    """Gauss-Jordan elimination; returns the nonzero rows, their rhs, pivots and consistency."""
    rows = [row[:] for row in rows]
    rhs = rhs[:]
    width = len(rows[0]) if rows else 0
    pivots: list[int] = []
    rank = 0
    for col in range(width):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        rhs[rank], rhs[pivot] = rhs[pivot], rhs[rank]
        scale = rows[rank][col]
        rows[rank] = [x / scale for x in rows[rank]]
        rhs[rank] /= scale
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank], strict=True)]
                rhs[r] -= factor * rhs[rank]
        pivots.append(col)
        rank += 1
    consistent = all(value == 0 for value in rhs[rank:])
    return rows[:rank], rhs[:rank], pivots, consistent


def _minimum_norm(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Exact ``R^T (R R^T)^-1 b`` for independent rows ``R``."""
    gram = [
        [sum((a * b for a, b in zip(r1, r2, strict=True)), Fraction(0)) for r2 in rows]
        for r1 in rows
    ]
    _, y, _, _ = _row_reduce(gram, rhs)
    width = len(rows[0])
    return [sum((rows[i][j] * y[i] for i in range(len(rows))), Fraction(0)) for j in range(width)]


def solve_angles(sys: LinearSystem, flat: bool = False) -> AngleSolution:
    """Solve the corner-angle system exactly and classify it by rank.

    With ``flat=True`` every triangle's angles must add up to pi, which is only
    meaningful on a genus-1 surface.

    Raises:
        PreconditionError: if ``flat`` is requested for a surface of genus other than 1.
        InternalConsistencyError: if a solved system violates its own equations or the
            flat-geometry cross-check ``N_v = 2 N_lht`` fails.
    """
    equations = list(sys.equations)
    if flat:
        if not sys.triangles:
            raise PreconditionError("Flat angles need the triangle corner triples of the graph")
        if sys.genus is not None and sys.genus != 1:
            raise PreconditionError(
                f"Flat angles require genus 1; the surface has genus {sys.genus}"
            )
        equations += [
            Equation(terms={corner: Fraction(1) for corner in triangle}, rhs_pi=Fraction(1))
            for triangle in sys.triangles
        ]

    variables = sorted(set(sys.variables).union(*(eq.terms for eq in equations)))
    column = {dart: j for j, dart in enumerate(variables)}
    matrix = []
    for eq in equations:
        row = [Fraction(0)] * len(variables)
        for dart, coeff in eq.terms.items():
            row[column[dart]] += coeff
        matrix.append(row)
    rhs = [eq.rhs_pi for eq in equations]

    reduced, reduced_rhs, pivots, consistent = _row_reduce(matrix, rhs)
    if not consistent:
        logger.warning("Angle system is inconsistent", equations=len(equations))
        return AngleSolution(status=SolutionStatus.INCONSISTENT, flat=flat)

    nullity = len(variables) - len(pivots)
    if nullity == 0:
        solution = [Fraction(0)] * len(variables)
        for value, col in zip(reduced_rhs, pivots, strict=True):
            solution[col] = value
        status = SolutionStatus.UNIQUE
    else:
        solution = (
            _minimum_norm(reduced, reduced_rhs) if reduced else [Fraction(0)] * len(variables)
        )
        status = SolutionStatus.UNDERDETERMINED
        logger.warning("Angle system is underdetermined", nullity=nullity)

    values = {dart: float(solution[column[dart]]) * math.pi for dart in variables}
    residual = max(
        (
            abs(sum(float(c) * values[d] for d, c in eq.terms.items()) - float(eq.rhs_pi) * math.pi)
            for eq in equations
        ),
        default=0.0,
    )
    tolerance = get_config().tolerances.residual
    if status is SolutionStatus.UNIQUE and residual >= tolerance:
        raise InternalConsistencyError(f"Unique angle solution has residual {residual:.3e}")

    if flat and sys.cusp_count is not None and len(sys.triangles) != 2 * sys.cusp_count:
        raise InternalConsistencyError(
            f"Flat solution with {len(sys.triangles)} triangles and {sys.cusp_count} cusps "
            "contradicts N_v = 2 N_lht"
        )

    logger.info("Solved angle system", status=status.value, nullity=nullity, flat=flat)
    return AngleSolution(
        status=status,
        values=values,
        exact={dart: solution[column[dart]] for dart in variables},
        nullity=nullity,
        residual=residual,
        flat=flat,
    )
