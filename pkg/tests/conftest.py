from typing import Callable
import pytest

from inversive_geometry.field_core import Field, parse_field
from inversive_geometry.quad_space import QuadSpace
from inversive_geometry.sampling import DEFAULT_SEED, Sampler


@pytest.fixture
def field_fixture() -> Callable:
    """Fixture to create a field from its descriptor."""

    def factory(descriptor="Q") -> Field:
        return parse_field(descriptor)

    return factory


@pytest.fixture
def space_fixture(field_fixture) -> Callable:
    """Fixture to create a diagonal quadratic space, the Euclidean plane by default."""

    def factory(descriptor="Q", diag=(1, 1)) -> QuadSpace:
        return QuadSpace(field_fixture(descriptor), tuple(diag))

    return factory


@pytest.fixture
def sampler_fixture(space_fixture) -> Callable:
    """Fixture to create a seeded sampler over a space."""

    def factory(descriptor="Q", diag=(1, 1), seed=DEFAULT_SEED) -> Sampler:
        return Sampler(space_fixture(descriptor, diag), seed)

    return factory


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: acceptance-scale runs")
