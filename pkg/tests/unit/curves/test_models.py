"""Tests for curve pieces and closed cusp curves."""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from src.curves import (
    CuspCurve,
    GeodesicArc,
    HorocyclicSegment,
    VerticalSegment,
    to_punctured_disk,
    turning_angle,
)


def test_piece_lengths_and_areas():
    """Test closed-form lengths, curvatures and area contributions."""
    horocycle = HorocyclicSegment(height=0.5, x0=0.0, x1=1.0)
    assert horocycle.hyperbolic_length() == 2.0
    assert horocycle.geodesic_curvature() == 1.0
    assert HorocyclicSegment(height=0.5, x0=1.0, x1=0.0).geodesic_curvature() == -1.0

    vertical = VerticalSegment(x=0.0, y0=1.0, y1=math.e)
    assert vertical.hyperbolic_length() == pytest.approx(1.0)
    assert vertical.area_contribution() == 0.0

    arc = GeodesicArc(center=0.0, radius=1.0, phi0=2 * math.pi / 3, phi1=math.pi / 3)
    assert arc.hyperbolic_length() == pytest.approx(2 * math.log(math.tan(math.pi / 3)))
    assert arc.area_contribution() == pytest.approx(math.pi / 3)
    assert arc.start == pytest.approx(complex(-0.5, math.sqrt(3) / 2))


def test_arc_must_stay_in_upper_half_plane():
    """Test the angle range of geodesic arcs."""
    with pytest.raises(ValidationError, match="upper half-plane"):
        GeodesicArc(center=0.0, radius=1.0, phi0=0.0, phi1=1.0)


def test_curve_must_close_up():
    """Test that consecutive pieces chain and the last one returns after one period."""
    with pytest.raises(ValidationError, match="ends at"):
        CuspCurve(pieces=[HorocyclicSegment(height=1.0, x0=0.0, x1=0.5)])
    with pytest.raises(ValidationError, match="at least one piece"):
        CuspCurve(pieces=[])
    curve = CuspCurve(pieces=[HorocyclicSegment(height=1.0, x0=0.0, x1=2.0)], period=2.0)
    assert curve.enclosed_area == 2.0
    assert curve.corner_angles() == [0.0]


def test_pieces_parse_by_kind():
    """Test the discriminated piece union from plain JSON data."""
    curve = CuspCurve.model_validate(
        {
            "pieces": [
                {"kind": "horocycle", "height": 0.25, "x0": -0.5, "x1": 0.5},
            ]
        }
    )
    assert isinstance(curve.pieces[0], HorocyclicSegment)
    dumped = curve.model_dump(mode="json")
    assert dumped["enclosed_area"] == 4.0
    assert dumped["pieces"][0]["kind"] == "horocycle"


def test_turning_angle():
    """Test signed exterior angles."""
    assert turning_angle(1, 1j) == pytest.approx(math.pi / 2)
    assert turning_angle(1j, 1) == pytest.approx(-math.pi / 2)
    assert turning_angle(1, 1) == 0.0


def test_punctured_disk_and_reflection():
    """Test the exponential map to the disk and the mirror image of a curve."""
    image = to_punctured_disk(np.array([0.25 + 0j, 0.0 + 1j]))
    assert image[0] == pytest.approx(1j)
    assert image[1] == pytest.approx(math.exp(-2 * math.pi))

    curve = CuspCurve(pieces=[HorocyclicSegment(height=1.0, x0=-0.5, x1=0.5)])
    mirrored = curve.reflected(n=3)
    assert mirrored == pytest.approx([0.5 + 1j, 0.0 + 1j, -0.5 + 1j])
