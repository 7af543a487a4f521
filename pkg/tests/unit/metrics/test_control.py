"""Tests for curvature-controlled profiles and the metric comparison check."""

import math

import numpy as np
import pytest

from src.errors import PreconditionError
from src.metrics import (
    ComparisonVerdict,
    DiskProfile,
    DStarProfile,
    ShiftedProfile,
    compare_metrics,
    comparison_sandwich,
    curvature_control_profile,
    curvature_from_g,
    default_grid,
    g_disk,
    g_disk_prime,
    g_dstar,
    g_dstar_prime,
)

GRID = default_grid(400)


def test_g_representation_of_complete_metrics():
    """Test the curvature formula in terms of g on the disk and punctured-disk metrics."""
    r = np.linspace(0.05, 0.95, 19)
    disk = curvature_from_g(r, g_disk(r), g_disk_prime(r), np.square((1 - r**2) / 2))
    dstar = curvature_from_g(r, g_dstar(r), g_dstar_prime(r), np.square(r * np.log(r)))
    assert disk == pytest.approx(np.full(19, -1.0))
    assert dstar == pytest.approx(np.full(19, -1.0))


def test_controlled_profile_respects_bounds():
    """Test the pinched curvature and agreement with u_D* from r_eps on."""
    controlled = curvature_control_profile(0.1, GRID)
    r_eps, profile, result = controlled.r_eps, controlled.profile, controlled.report
    assert result.kappa_min >= -1.1
    assert result.kappa_max <= -1 / 1.1
    assert result.matches_dstar
    assert result.r_eps == r_eps
    assert 0 < r_eps < 1
    outer = np.linspace(r_eps, 0.99, 20)
    assert np.array_equal(profile.u(outer), DStarProfile().u(outer))
    assert set(controlled.model_dump()) == {"report"}


def test_controlled_profile_curvature_paths_agree():
    """Test that the g route and the u route give the same curvature."""
    profile = curvature_control_profile(0.2, GRID).profile
    r = np.linspace(0.05, 0.95, 37)
    from_u = -(profile.d2u(r) + profile.du(r) / r) * np.exp(-2 * profile.u(r))
    assert profile.curvature(r) == pytest.approx(from_u, abs=1e-7)


def test_controlled_profile_needs_positive_eps():
    """Test the eps precondition."""
    with pytest.raises(PreconditionError):
        curvature_control_profile(0.0, GRID)


def test_comparison_sandwich_holds():
    """Test ds_D^2 / (1 + eps) <= ds^2 <= (1 + eps) ds_D^2 on the grid."""
    lower, upper = comparison_sandwich(0.1, GRID)
    assert lower.holds and upper.holds
    assert lower.hypothesis_failures == 0
    assert upper.max_excess <= 0


def test_compare_metrics_verdicts():
    """Test the three verdicts of the comparison check."""
    disk, dstar = DiskProfile(), DStarProfile()
    assert compare_metrics(disk, dstar, GRID).verdict is ComparisonVerdict.HOLDS
    assert compare_metrics(dstar, disk, GRID).verdict is ComparisonVerdict.FAILS
    flatter = ShiftedProfile(disk, math.log(2) / 2)
    report = compare_metrics(flatter, disk, GRID)
    assert report.verdict is ComparisonVerdict.HYPOTHESIS_VIOLATION
    assert report.hypothesis_failures == len(GRID)
