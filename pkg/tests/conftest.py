import random

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "gzest", max_examples=1000, deadline=None, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("gzest")


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=20240917, help="seed for randomized suites")


@pytest.fixture
def rng(request):
    return random.Random(request.config.getoption("--seed"))
