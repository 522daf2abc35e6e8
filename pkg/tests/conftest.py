"""Fixtures compartidos por la suite de tests."""

import math

import pytest
from hypothesis import HealthCheck, settings as hypothesis_settings

from app.gaussian.states import make_sts, make_tmsv, make_tss, pi_half_pair

hypothesis_settings.register_profile(
    "numerics",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
hypothesis_settings.load_profile("numerics")


@pytest.fixture
def tmsv_half():
    """TMSV con r = 0.5."""
    return make_tmsv(0.5)


@pytest.fixture
def sts_symmetric():
    return make_sts(0.5, 1.0, 1.0)


@pytest.fixture
def sts_asymmetric():
    return make_sts(0.5, 1.0, 0.0)


@pytest.fixture
def tss_symmetric():
    return make_tss(0.1, 1.0, 1.0)


@pytest.fixture
def tmsv_pair(tmsv_half):
    return pi_half_pair(tmsv_half)


@pytest.fixture
def tmsv_fidelity():
    """Fidelidad exacta del par π/2 de un TMSV con r = 0.5."""
    return 2.0 / (1.0 + math.cosh(1.0) ** 2)
