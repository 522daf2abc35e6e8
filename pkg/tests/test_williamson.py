"""Tests de la forma normal de Williamson."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from app.core.errors import DomainError
from app.gaussian.states import apply_local, apply_remote, convert, make_sts, make_tss, thermal, vacuum
from app.gaussian.symplectic import euler_traceless, is_symplectic
from app.gaussian.williamson import ensure_physical, is_physical, symplectic_spectrum, williamson
from app.schemas.state import Convention, GaussianState


def test_vacuum_spectrum_and_orthogonal_transform():
    symp, nu = williamson(vacuum())
    np.testing.assert_allclose(nu, [1.0, 1.0])
    np.testing.assert_allclose(symp.mat @ symp.mat.T, np.eye(4), atol=1e-12)


def test_sts_spectrum_equals_thermal_spectrum():
    np.testing.assert_allclose(symplectic_spectrum(make_sts(0.5, 1.0, 0.0)), [3.0, 1.0], rtol=1e-10)
    _, nu = williamson(make_sts(0.5, 1.0, 0.0))
    np.testing.assert_allclose(nu, [3.0, 1.0], rtol=1e-10)


def test_spectrum_follows_convention():
    half = convert(thermal(2.0, 0.5), Convention.VACUUM_HALF)
    np.testing.assert_allclose(symplectic_spectrum(half), [2.5, 1.0])


@given(
    st.floats(min_value=0.0, max_value=1.5),
    st.floats(min_value=0.0, max_value=4.0),
    st.floats(min_value=0.0, max_value=4.0),
    st.floats(min_value=0.0, max_value=3.0),
    st.floats(min_value=-1.5, max_value=1.5),
)
def test_williamson_reconstructs_covariance(r, n1, n2, theta, log_xi):
    state = apply_local(make_sts(r, n1, n2), euler_traceless(theta, 2.0 ** log_xi))
    symp, nu = williamson(state)
    recon = symp.mat @ np.diag(np.repeat(nu, 2)) @ symp.mat.T
    scale = max(1.0, float(np.max(np.abs(state.cov))))
    np.testing.assert_allclose(recon, state.cov, atol=1e-9 * scale)
    assert is_symplectic(symp.mat, tol=1e-9)
    assert nu[0] >= nu[1]
    np.testing.assert_allclose(sorted(nu), sorted([1 + 2 * n1, 1 + 2 * n2]), rtol=1e-8)


def test_physicality():
    assert is_physical(vacuum())
    squeezed_below_vacuum = GaussianState(
        disp=np.zeros(4), cov=np.diag([0.4, 0.4, 1.0, 1.0]) * 0.5, convention=Convention.VACUUM_HALF
    )
    assert not is_physical(squeezed_below_vacuum)
    with pytest.raises(DomainError):
        ensure_physical(squeezed_below_vacuum)


def test_williamson_rejects_indefinite_covariance():
    state = GaussianState(disp=np.zeros(4), cov=np.diag([1.0, -1.0, 1.0, 1.0]))
    with pytest.raises(DomainError):
        williamson(state)


@given(
    st.floats(min_value=0.0, max_value=1.2),
    st.floats(min_value=0.0, max_value=3.0),
    st.floats(min_value=0.0, max_value=3.0),
    st.floats(min_value=0.0, max_value=3.0),
    st.floats(min_value=-1.5, max_value=1.5),
)
def test_spectrum_is_invariant_under_local_symplectics(r, n1, n2, theta, log_xi):
    transform = euler_traceless(theta, 2.0 ** log_xi)
    for state in (make_sts(r, n1, n2), make_tss(r, n1, n2)):
        expected = symplectic_spectrum(state)
        for moved in (apply_local(state, transform), apply_remote(state, transform)):
            np.testing.assert_allclose(symplectic_spectrum(moved), expected, rtol=1e-9)
