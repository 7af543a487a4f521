"""Tests for the exact corner-angle solver."""

import math
from fractions import Fraction

import pytest
from pydantic import ValidationError

from src.analysis import (
    Equation,
    LinearSystem,
    SolutionStatus,
    cusp_equations,
    solve_angles,
    symmetry_equalities,
)
from src.errors import PreconditionError
from src.graph import corner_orbits, symmetry_group


def symmetric_system(g):
    orbits = corner_orbits(g, symmetry_group(g))
    return cusp_equations(g).merge(symmetry_equalities(orbits))


def test_cusp_equations(theta_flipped):
    """Test one equation per cusp, each summing the corners it meets."""
    system = cusp_equations(theta_flipped)
    assert len(system.equations) == 1
    equation = system.equations[0]
    assert equation.terms == {d: Fraction(1) for d in range(6)}
    assert equation.rhs_pi == 2
    assert system.genus == 1
    assert system.cusp_count == 1
    assert system.triangles == [(0, 1, 2), (3, 4, 5)]


def test_equilateral_torus(theta_flipped):
    """Test that symmetry forces every corner of the one-cusp torus to pi/3."""
    solution = solve_angles(symmetric_system(theta_flipped))
    assert solution.status is SolutionStatus.UNIQUE
    assert set(solution.exact.values()) == {Fraction(1, 3)}
    for value in solution.values.values():
        assert value == pytest.approx(math.pi / 3, abs=1e-12)
    assert solution.admissible


def test_flat_solution_one_flip(tetrahedron_one_flip):
    """Test the flat structure on the once-flipped tetrahedron."""
    solution = solve_angles(symmetric_system(tetrahedron_one_flip), flat=True)
    assert solution.status is SolutionStatus.UNIQUE
    assert solution.flat
    for corner in (9, 10, 11):
        assert solution.exact[corner] == Fraction(1, 3)
    for vertex in range(4):
        total = sum(solution.values[3 * vertex + i] for i in range(3))
        assert total == pytest.approx(math.pi, abs=1e-12)


def test_flat_solution_two_flips(tetrahedron_two_flips):
    """Test that the long cusp gets quarter turns and the short one right angles."""
    g = tetrahedron_two_flips
    solution = solve_angles(symmetric_system(g), flat=True)
    assert solution.status is SolutionStatus.UNIQUE
    assert set(solution.exact.values()) == {Fraction(1, 2), Fraction(1, 4)}
    system = cusp_equations(g)
    for equation in system.equations:
        corners = len(equation.terms)
        expected = Fraction(1, 2) if corners == 4 else Fraction(1, 4)
        assert {solution.exact[c] for c in equation.terms} == {expected}


def test_flat_requires_genus_one(tetrahedron):
    """Test that the flat constraint is refused away from genus 1."""
    with pytest.raises(PreconditionError, match="genus 1"):
        solve_angles(cusp_equations(tetrahedron), flat=True)
    with pytest.raises(PreconditionError, match="triangle"):
        solve_angles(LinearSystem(variables=[0]), flat=True)


def test_underdetermined_minimum_norm(tetrahedron):
    """Test that cusp equations alone leave free directions and give the uniform solution."""
    solution = solve_angles(cusp_equations(tetrahedron))
    assert solution.status is SolutionStatus.UNDERDETERMINED
    assert solution.nullity == 8
    assert set(solution.exact.values()) == {Fraction(2, 3)}
    assert solution.residual < 1e-12


def test_inconsistent_system():
    """Test that contradictory equations are reported, not raised."""
    system = LinearSystem(
        variables=[0, 1],
        equations=[
            Equation(terms={0: 1, 1: 1}, rhs_pi=1),
            Equation(terms={0: 2, 1: 2}, rhs_pi=1),
        ],
    )
    solution = solve_angles(system)
    assert solution.status is SolutionStatus.INCONSISTENT
    assert solution.values == {}
    assert not solution.admissible


def test_rational_fields():
    """Test that coefficients accept integers and 'p/q' strings but not floats."""
    equation = Equation(terms={0: "1/2", 1: 3}, rhs_pi="2/3")
    assert equation.terms == {0: Fraction(1, 2), 1: Fraction(3)}
    assert equation.model_dump(mode="json")["rhs_pi"] == "2/3"
    with pytest.raises(ValidationError):
        Equation(terms={0: 0.5}, rhs_pi=1)


def test_symmetry_equalities():
    """Test the equalities generated inside each orbit."""
    system = symmetry_equalities([[0, 2, 4], [1]])
    assert system.variables == [0, 1, 2, 4]
    assert [eq.terms for eq in system.equations] == [
        {0: Fraction(1), 2: Fraction(-1)},
        {0: Fraction(1), 4: Fraction(-1)},
    ]
