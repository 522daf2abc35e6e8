"""Tests de la fidelidad de Uhlmann gaussiana."""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from app.core.errors import DomainError
from app.distinguishability.fidelity import fidelity_determinants, uhlmann_fidelity
from app.gaussian.states import (
    convert,
    make_coherent_thermal,
    make_sdts,
    make_sts,
    pi_half_pair,
    thermal,
    vacuum,
)
from app.schemas.state import Convention, GaussianState


@given(
    st.floats(min_value=0.0, max_value=1.0),
    st.floats(min_value=0.0, max_value=2.0),
    st.floats(min_value=0.0, max_value=2.0),
)
def test_fidelity_of_state_with_itself_is_one(r, n1, n2):
    state = make_sts(r, n1, n2)
    assert uhlmann_fidelity(state, state) == pytest.approx(1.0, rel=1e-7)


def test_fidelity_is_symmetric():
    s1 = make_sdts(0.4, complex(0.3, 0.1), 0.5, 0.2)
    s2 = make_sts(0.7, 0.1, 0.9)
    assert uhlmann_fidelity(s1, s2) == pytest.approx(uhlmann_fidelity(s2, s1), rel=1e-10)


def test_tmsv_phase_shift(tmsv_pair, tmsv_fidelity):
    assert uhlmann_fidelity(*tmsv_pair) == pytest.approx(tmsv_fidelity, rel=1e-10)
    assert tmsv_fidelity == pytest.approx(0.5915238, abs=1e-7)


@pytest.mark.parametrize("alpha, n1", [(1.0, 0.0), (0.7, 0.5), (1.3, 2.0)])
def test_coherent_thermal_phase_shift(alpha, n1):
    pair = pi_half_pair(make_coherent_thermal(alpha, n1, 0.3))
    expected = math.exp(-2 * alpha ** 2 / (1 + 2 * n1))
    assert uhlmann_fidelity(*pair) == pytest.approx(expected, rel=1e-10)


def test_coherent_states_overlap():
    alpha, beta = complex(0.5, 0.2), complex(-0.3, 0.4)
    fidelity = uhlmann_fidelity(make_coherent_thermal(alpha, 0, 0), make_coherent_thermal(beta, 0, 0))
    assert fidelity == pytest.approx(math.exp(-abs(alpha - beta) ** 2), rel=1e-10)


@pytest.mark.parametrize("n", [0.1, 1.0, 4.0])
def test_thermal_against_vacuum(n):
    assert uhlmann_fidelity(thermal(n, 0.0), vacuum()) == pytest.approx(1.0 / (1.0 + n), rel=1e-10)


def test_pure_states_have_exactly_vanishing_uncertainty_determinant():
    tmsv = convert(make_sts(0.8, 0.0, 0.0), Convention.VACUUM_HALF).cov
    noisy = convert(make_sts(0.8, 1.0, 0.5), Convention.VACUUM_HALF).cov
    assert fidelity_determinants(tmsv, noisy)[2] == 0.0
    assert fidelity_determinants(noisy, noisy)[2] > 0.0


def test_fidelity_ignores_input_convention():
    s1, s2 = pi_half_pair(make_sts(0.5, 0.4, 0.2))
    half = convert(s2, Convention.VACUUM_HALF)
    assert uhlmann_fidelity(s1, half) == pytest.approx(uhlmann_fidelity(s1, s2), rel=1e-12)


def test_determinants_for_identical_vacua():
    half = vacuum(Convention.VACUUM_HALF).cov
    delta_big, gamma_big, lambda_big = fidelity_determinants(half, half)
    assert delta_big == pytest.approx(1.0)
    assert gamma_big == pytest.approx(1.0)
    assert lambda_big == pytest.approx(0.0, abs=1e-12)


def test_unphysical_state_is_rejected():
    bad = GaussianState(disp=np.zeros(4), cov=0.5 * np.eye(4))
    with pytest.raises(DomainError):
        uhlmann_fidelity(bad, vacuum())
