import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from cdl import construct

settings.register_profile(
    "cdl", max_examples=200, deadline=None, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("cdl")


_CACHE = {}


def cached(name, *params):
    key = (name,) + params
    if key not in _CACHE:
        _CACHE[key] = construct.build(name, *params)
    return _CACHE[key]


@pytest.fixture(scope="session")
def gallery_set():
    return cached


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
