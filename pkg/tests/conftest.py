import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from semiframes import TruncationLadder

settings.register_profile("default", deadline=None, max_examples=40, derandomize=True,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def ladder():
    return TruncationLadder((8, 16, 32, 64, 128))


@pytest.fixture
def small_ladder():
    return TruncationLadder((4, 8, 16, 32))


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def random_complex(rng, shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
