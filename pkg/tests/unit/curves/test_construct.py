"""Tests for the obstruction curves and their certificates."""

import math

import numpy as np
import pytest
from scipy import integrate

from src.curves import (
    convex_counterexample,
    convex_curve,
    gauss_bonnet_total,
    geodesic_horocycle_curve,
    horocycle,
    quotient_distance,
    slit_horocycle,
    slit_parameters,
    total_geodesic_curvature,
)
from src.curves.construct import NO_EXTENSION_GEODESIC, _convex_gap
from src.curves.render import render_curve
from src.errors import DomainError, PreconditionError
from src.metrics import horoball_area, u_dstar


def sector_area(r1: float, r2: float, theta: float) -> float:
    """Area above the slit curve by quadrature in s = -log r, where the density is 1/s^2."""
    l1, l2 = -math.log(r1), -math.log(r2)
    inner, _ = integrate.dblquad(
        lambda s, phi: 1 / s**2, -theta, theta, lambda phi: l1, lambda phi: math.inf
    )
    outer, _ = integrate.dblquad(
        lambda s, phi: 1 / s**2, theta, 2 * math.pi - theta, lambda phi: l2, lambda phi: math.inf
    )
    return inner + outer


@pytest.mark.parametrize("r", [0.2, 1 / math.e, 0.7])
def test_horocycle_area(r):
    """Test that a horocycle bounds the horoball area and its curvature agrees."""
    curve = horocycle(r)
    assert curve.enclosed_area == pytest.approx(horoball_area(r))
    assert total_geodesic_curvature(curve) == pytest.approx(horoball_area(r))
    assert gauss_bonnet_total(curve) == pytest.approx(horoball_area(r), abs=1e-7)


def test_horocycle_at_critical_radius():
    """Test that the circle of radius 1/e has total curvature exactly 2 pi."""
    assert total_geodesic_curvature(horocycle(1 / math.e)) == pytest.approx(2 * math.pi)
    with pytest.raises(DomainError):
        horocycle(1.5)


def test_slit_parameters():
    """Test the default slit: u(R1) = u(R2) + 0.1 and area 2 pi + 0.5."""
    r1, theta = slit_parameters(0.8)
    assert u_dstar(0.8) == pytest.approx(1.723, abs=1e-3)
    assert u_dstar(r1) == pytest.approx(u_dstar(0.8) + 0.1, abs=1e-9)
    assert r1 == pytest.approx(0.056, abs=2e-3)
    assert theta == pytest.approx(2.585, abs=5e-3)


def test_slit_horocycle_is_certified():
    """Test the slit curve's area, the maximum point and the sign of the normal derivative."""
    r1, theta = slit_parameters(0.8)
    curve, certificate = slit_horocycle(r1, 0.8, theta)

    expected = -2 * theta / math.log(r1) - 2 * (math.pi - theta) / math.log(0.8)
    assert certificate.enclosed_area == pytest.approx(2 * math.pi + 0.5, abs=1e-9)
    assert certificate.enclosed_area == pytest.approx(expected, abs=1e-12)
    assert curve.enclosed_area == pytest.approx(expected, abs=1e-12)
    assert sector_area(r1, 0.8, theta) == pytest.approx(expected, abs=1e-6)
    assert certificate.total_curvature == pytest.approx(expected, abs=1e-7)

    assert certificate.max_radius == r1
    assert certificate.max_point == pytest.approx(complex(r1, 0.0))
    assert certificate.normal_derivative < 0
    assert certificate.certified
    assert certificate.model_dump(mode="json")["max_point"] == pytest.approx([r1, 0.0])


@pytest.mark.parametrize(
    "r1,r2,theta,message",
    [
        (0.0, 0.8, 1.0, "R1 must be positive"),
        (0.5, 0.8, 1.0, "below 1/e"),
        (0.05, 0.3, 1.0, "exceed 1/e"),
        (0.05, 1.0, 1.0, "below 1"),
        (0.05, 0.8, 4.0, "theta"),
    ],
)
def test_slit_preconditions(r1, r2, theta, message):
    """Test that each failed inequality is named."""
    with pytest.raises(PreconditionError, match=message):
        slit_horocycle(r1, r2, theta)


def test_slit_parameters_preconditions():
    """Test the range of R2 for derived parameters."""
    with pytest.raises(PreconditionError):
        slit_parameters(0.2)
    with pytest.raises(PreconditionError):
        slit_parameters(0.8, u_gap=0.0)


def test_angle_inequality():
    """Test the angle inequality: true at 0.1, false close to pi/2."""
    cos = math.cos(0.1)
    lhs = math.pi / (math.pi + math.tan(0.1) - 0.1)
    rhs = -cos * math.log(cos) / (1 - cos)
    assert lhs == pytest.approx(0.99989, abs=1e-5)
    assert rhs == pytest.approx(0.998, abs=1e-3)
    assert _convex_gap(np.array([0.1]))[0] == pytest.approx(lhs - rhs)
    assert _convex_gap(np.array([1.55]))[0] < 0


def test_convex_counterexample():
    """Test the convex curve: total curvature above 2 pi and yet u larger on the arc."""
    y, theta, curve, certificate = convex_counterexample()
    assert y == pytest.approx(0.1304, abs=2e-3)
    assert 0.9 < theta < 1.1
    assert certificate.certified
    assert certificate.curvature_margin > 0
    assert certificate.u_margin == pytest.approx(0.078, abs=0.01)
    assert certificate.piece_curvatures == [0.0, 1.0]
    assert certificate.total_curvature > 2 * math.pi
    assert certificate.total_curvature == pytest.approx(2 * theta + 2 * certificate.x / y)
    assert gauss_bonnet_total(curve) == pytest.approx(certificate.total_curvature, abs=1e-7)
    assert curve.enclosed_area == pytest.approx(certificate.total_curvature)
    assert all(angle == pytest.approx(theta) for angle in curve.corner_angles())


def test_convex_curve_must_fit_in_a_period():
    """Test the width precondition of the convex curve."""
    with pytest.raises(PreconditionError, match="one period"):
        convex_curve(0.4, 1.2)


def test_geodesic_horocycle_curve():
    """Test lengths, total curvature, symmetry and the shortcut in the quotient."""
    curve, report = geodesic_horocycle_curve()
    beta = math.asin(report.endpoint_height)
    assert report.geodesic_length == pytest.approx(NO_EXTENSION_GEODESIC)
    assert report.horocycle_length == pytest.approx(math.pi)
    assert report.total_curvature == pytest.approx(3 * math.pi - 2 * beta)
    assert 2 * math.pi < report.total_curvature < 3 * math.pi
    assert report.curvature_exceeds_2pi
    assert report.symmetric
    assert report.quotient_distance == pytest.approx(2 * math.asinh(math.pi))
    assert report.quotient_distance == pytest.approx(math.acosh(1 + 2 * math.pi**2))
    assert report.shortcut_exists
    assert gauss_bonnet_total(curve) == pytest.approx(report.total_curvature, abs=1e-7)


def test_quotient_distance_uses_translates():
    """Test that the distance in the quotient takes the nearest translate."""
    assert quotient_distance(1j, 0.9 + 1j, 1.0) == pytest.approx(
        math.acosh(1 + 0.01 / 2)
    )


@pytest.mark.parametrize("builder", ["slit", "convex", "noextend"])
def test_render_curve(tmp_path, builder):
    """Test that every construction renders to SVG."""
    if builder == "slit":
        r1, theta = slit_parameters(0.8)
        curve, _ = slit_horocycle(r1, 0.8, theta)
    elif builder == "convex":
        curve = convex_counterexample()[2]
    else:
        curve, _ = geodesic_horocycle_curve()
    path = tmp_path / f"{builder}.svg"
    render_curve(curve, path, title=builder)
    assert "<svg" in path.read_text()
