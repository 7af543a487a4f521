"""Shared fixtures: the worked example graphs."""

import pytest

from src.config import get_config
from src.graph import FlipPattern, named_graph


def example(base: str, *flips: int):
    return named_graph(FlipPattern(base=base, flipped_vertices=frozenset(flips)))


@pytest.fixture(autouse=True)
def fresh_config():
    """Re-read the environment for every test."""
    get_config.cache_clear()
    yield
    get_config.cache_clear()


@pytest.fixture
def theta():
    return example("theta")


@pytest.fixture
def theta_flipped():
    return example("theta", 0)


@pytest.fixture
def tetrahedron():
    return example("tetrahedron")


@pytest.fixture
def tetrahedron_one_flip():
    return example("tetrahedron", 3)


@pytest.fixture
def tetrahedron_two_flips():
    return example("tetrahedron", 2, 3)


@pytest.fixture
def cube():
    return example("cube")


@pytest.fixture
def cube_one_flip():
    return example("cube", 0)


@pytest.fixture
def cube_two_flips():
    return example("cube", 0, 6)
