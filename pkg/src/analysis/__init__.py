"""Conformal-structure computations on the graph's triangles."""

from .angles import (
    AngleSolution,
    Equation,
    LinearSystem,
    SolutionStatus,
    cusp_equations,
    solve_angles,
    symmetry_equalities,
)

__all__ = [
    "AngleSolution",
    "Equation",
    "LinearSystem",
    "SolutionStatus",
    "cusp_equations",
    "solve_angles",
    "symmetry_equalities",
]
