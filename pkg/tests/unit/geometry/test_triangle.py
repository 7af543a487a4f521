"""Tests for marked ideal triangles and tick shifts."""

import math

import pytest
from pydantic import ValidationError

from src.geometry import (
    Mobius,
    TickShifts,
    horocyclic_segment_lengths,
    place_triangle,
    standard_triangle,
    tick_distances,
    triangle_area,
)


@pytest.fixture
def placement():
    """A generic orientation-preserving placement."""
    return Mobius.from_matrix([[2.0, 1.0], [1.0, 1.0]])


def test_standard_triangle():
    """Test area, horocyclic segments and tick positions of the standard triangle."""
    triangle = standard_triangle()
    assert triangle_area(triangle) == pytest.approx(math.pi, abs=1e-8)
    assert horocyclic_segment_lengths(triangle) == pytest.approx([1.0, 1.0, 1.0])
    assert triangle.tick_offsets() == pytest.approx([0.0, 0.0, 0.0], abs=1e-12)
    distances = tick_distances(triangle)
    assert distances == pytest.approx([distances[0]] * 3)


def test_placement_is_an_isometry(placement):
    """Test that a placed standard triangle keeps its area and segment lengths."""
    triangle = place_triangle(placement, (0.0, 0.0, 0.0))
    assert triangle_area(triangle) == pytest.approx(math.pi, abs=1e-8)
    assert horocyclic_segment_lengths(triangle) == pytest.approx([1.0, 1.0, 1.0])
    assert tick_distances(triangle) == pytest.approx(tick_distances(standard_triangle()))


def test_shifted_tick_scales_segment():
    """Test that moving a tick by alpha along its side rescales the next segment."""
    triangle = place_triangle(Mobius.identity(), (0.3, 0.0, 0.0))
    assert horocyclic_segment_lengths(triangle) == pytest.approx([1.0, math.exp(-0.3), 1.0])
    assert triangle.tick_offsets() == pytest.approx([0.0, 0.0, 0.0], abs=1e-12)


def test_tick_shifts(tetrahedron):
    """Test defaults, bumps, pasted triangles and the finiteness check."""
    shifts = TickShifts.zero()
    assert shifts[5] == 0.0
    bumped = shifts.bumped(5, 0.25).bumped(5, 0.25)
    assert bumped[5] == 0.5
    assert shifts.values == {}

    pasted = TickShifts.from_triangles(tetrahedron, {1: (0.1, 0.2, 0.3)})
    assert pasted.values == {3: 0.1, 4: 0.2, 5: 0.3}

    with pytest.raises(ValidationError, match="finite"):
        TickShifts(values={0: math.inf})
