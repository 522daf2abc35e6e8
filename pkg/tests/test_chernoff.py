"""Tests del funcional Q_t y de la cota de Chernoff cuántica."""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from app.core.errors import DomainError
from app.distinguishability.chernoff import (
    affinity,
    chernoff_aux,
    g_kernel,
    lambda_kernel,
    local_traceless_link,
    minimize_q_t,
    normal_modes,
    q_t,
    qcb,
)
from app.distinguishability.fidelity import uhlmann_fidelity
from app.gaussian.states import (
    apply_local,
    make_coherent_thermal,
    make_sts,
    make_tss,
    pi_half_pair,
    thermal,
    vacuum,
)
from app.gaussian.symplectic import euler_traceless

T_VALUES = [0.2, 0.5, 0.7]


@pytest.mark.parametrize("t", T_VALUES)
def test_q_t_of_identical_states_is_one(t):
    state = make_sts(0.6, 1.5, 0.3)
    assert q_t(state, state, t) == pytest.approx(1.0, rel=1e-9)


@pytest.mark.parametrize("t", T_VALUES)
def test_q_t_of_pure_states_is_the_overlap(t, tmsv_pair, tmsv_fidelity):
    assert q_t(*tmsv_pair, t) == pytest.approx(tmsv_fidelity, rel=1e-9)


@pytest.mark.parametrize("t", T_VALUES)
def test_q_t_of_coherent_states(t):
    alpha = 1.0
    s1 = make_coherent_thermal(alpha, 0.0, 0.0)
    s2 = make_coherent_thermal(-1j * alpha, 0.0, 0.0)
    assert q_t(s1, s2, t) == pytest.approx(math.exp(-2 * alpha ** 2), rel=1e-9)


@pytest.mark.parametrize("n", [0.2, 1.0, 3.0])
@pytest.mark.parametrize("t", T_VALUES)
def test_q_t_thermal_against_vacuum(n, t):
    assert q_t(thermal(n, 0.0), vacuum(), t) == pytest.approx((1.0 + n) ** -t, rel=1e-9)


def test_affinity_bounded_by_fidelity():
    pair = pi_half_pair(make_sts(0.5, 1.0, 0.2))
    assert uhlmann_fidelity(*pair) <= affinity(*pair) + 1e-12
    assert affinity(*pair) <= math.sqrt(uhlmann_fidelity(*pair)) + 1e-12


@given(
    st.floats(min_value=0.05, max_value=1.2),
    st.floats(min_value=0.0, max_value=3.0),
    st.floats(min_value=0.0, max_value=3.0),
    st.floats(min_value=0.05, max_value=0.45),
)
def test_q_t_symmetric_for_traceless_pairs(r, n1, n2, t):
    for state in (make_sts(r, n1, n2), make_tss(math.sinh(r) ** 2, n1, n2)):
        pair = (state, apply_local(state, euler_traceless(0.0, 1.0)))
        assert abs(q_t(*pair, t) - q_t(*pair, 1.0 - t)) <= 1e-10


def test_unconstrained_minimum_sits_at_one_half():
    pair = pi_half_pair(make_sts(0.5, 1.0, 0.4))
    m1, m2 = (normal_modes(s) for s in pair)
    q_min, t_star = minimize_q_t(m1, m2, symmetric=False)
    assert q_min == pytest.approx(q_t(*pair, 0.5), rel=1e-10)
    assert t_star == pytest.approx(0.5, abs=1e-4)


def test_flat_chernoff_functional_reports_one_half(sts_asymmetric):
    pair = pi_half_pair(sts_asymmetric)
    assert q_t(*pair, 0.3) == pytest.approx(q_t(*pair, 0.5), rel=1e-8)
    m1, m2 = (normal_modes(s) for s in pair)
    q_min, t_star = minimize_q_t(m1, m2, symmetric=False)
    assert t_star == pytest.approx(0.5, abs=1e-12)
    assert q_min == pytest.approx(0.419974, abs=1e-6)


def test_traceless_link_detection(sts_asymmetric):
    assert local_traceless_link(*pi_half_pair(sts_asymmetric))
    assert not local_traceless_link(sts_asymmetric, sts_asymmetric)
    assert not local_traceless_link(*pi_half_pair(make_coherent_thermal(1.0, 0.5, 0.0)))
    assert not local_traceless_link(*pi_half_pair(thermal(1.0, 1.0)))


@pytest.mark.parametrize("n_th", [0.0, 1.0, 5.0, 20.0])
def test_qcb_plateau_for_symmetric_sts(n_th):
    state = make_sts(math.asinh(1.0), n_th, n_th)
    bound, t_star = qcb(*pi_half_pair(state))
    assert bound == pytest.approx(0.1, rel=1e-8)
    assert t_star == 0.5


def test_qcb_of_asymmetric_sts(sts_asymmetric):
    pair = pi_half_pair(sts_asymmetric)
    bound, t_star = qcb(*pair)
    assert bound == pytest.approx(0.209987, abs=1e-6)
    assert bound == pytest.approx(0.5 * q_t(*pair, 0.3), rel=1e-8)
    assert t_star == 0.5


def test_qcb_is_symmetric_in_arguments():
    s1 = make_coherent_thermal(0.8, 0.5, 0.0)
    s2 = make_sts(0.3, 0.2, 0.4)
    assert qcb(s1, s2)[0] == pytest.approx(qcb(s2, s1)[0], rel=1e-8)


def test_qcb_for_identical_states():
    state = make_sts(0.4, 0.5, 0.5)
    bound, _ = qcb(state, state)
    assert bound == pytest.approx(0.5)


def test_qcb_scales_with_copies(sts_symmetric):
    single, _ = qcb(*pi_half_pair(sts_symmetric))
    triple, _ = qcb(*pi_half_pair(sts_symmetric), copies=3)
    assert triple == pytest.approx(0.5 * (2 * single) ** 3, rel=1e-12)


def test_kernels_at_pure_mode():
    assert g_kernel(0.3, 1.0) == 1.0
    assert lambda_kernel(0.3, 1.0) == 1.0
    assert g_kernel(0.5, 3.0) == pytest.approx(math.sqrt(2.0) / (2.0 - math.sqrt(2.0)))


def test_chernoff_aux_for_vacuum():
    aux = chernoff_aux(vacuum(), vacuum(), 0.5)
    assert aux.delta_big == pytest.approx(1.0)
    assert aux.gamma_big == pytest.approx(1.0)
    assert aux.g_p == pytest.approx(1.0)
    np.testing.assert_allclose(aux.lambda_p, [1.0, 1.0, 1.0, 1.0])
    np.testing.assert_allclose(aux.v1 + aux.v2, 2 * np.eye(4), atol=1e-12)


@pytest.mark.parametrize("t", [0.0, 1.0, -0.2])
def test_q_t_rejects_t_outside_open_interval(t):
    with pytest.raises(DomainError):
        q_t(vacuum(), vacuum(), t)


def test_qcb_rejects_zero_copies():
    with pytest.raises(DomainError):
        qcb(vacuum(), vacuum(), copies=0)


@st.composite
def traceless_pairs(draw):
    """Par (ρ, (S ⊕ 1) ρ (S ⊕ 1)^T) con ρ STS o TSS y S = euler_traceless(θ, ξ)."""
    r = draw(st.floats(min_value=0.05, max_value=1.0))
    n1 = draw(st.floats(min_value=0.0, max_value=3.0))
    n2 = draw(st.floats(min_value=0.0, max_value=3.0))
    theta = draw(st.floats(min_value=0.0, max_value=math.pi))
    xi = draw(st.floats(min_value=0.5, max_value=2.0))
    family = draw(st.sampled_from(["sts", "tss"]))
    state = make_sts(r, n1, n2) if family == "sts" else make_tss(math.sinh(r) ** 2, n1, n2)
    return state, apply_local(state, euler_traceless(theta, xi))


@given(traceless_pairs())
def test_q_t_symmetric_for_random_traceless_transforms(pair):
    for t in (0.1, 0.25, 0.4):
        assert abs(q_t(*pair, t) - q_t(*pair, 1.0 - t)) <= 1e-8
    m1, m2 = (normal_modes(s) for s in pair)
    q_min, _ = minimize_q_t(m1, m2, symmetric=False)
    assert q_min == pytest.approx(q_t(*pair, 0.5), rel=1e-9)


@given(
    traceless_pairs(),
    st.floats(min_value=0.0, max_value=1.0),
    st.floats(min_value=0.0, max_value=1.0),
)
def test_q_t_is_convex_in_t(pair, alpha, n1):
    other = make_coherent_thermal(alpha, n1, 0.3)
    grid = np.linspace(0.05, 0.95, 19)
    for s1, s2 in (pair, (pair[0], other)):
        values = np.array([q_t(s1, s2, t) for t in grid])
        assert np.all(values[:-2] - 2 * values[1:-1] + values[2:] >= -1e-9)


@pytest.mark.parametrize("state", [make_sts(0.5, 1.0, 0.0), make_tss(1.0, 2.0, 0.0), make_sts(1.0, 0.0, 1.0)])
def test_affinity_between_fidelity_and_its_root_for_asymmetric_noise(state):
    pair = pi_half_pair(state)
    fidelity = uhlmann_fidelity(*pair)
    assert fidelity - 1e-12 <= affinity(*pair) <= math.sqrt(fidelity) + 1e-12
