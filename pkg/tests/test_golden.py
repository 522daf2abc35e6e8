"""Tests de la búsqueda de sección áurea."""

import pytest

from app.numerics.golden import golden_section_minimize


def test_interior_minimum():
    x, y = golden_section_minimize(lambda t: (t - 0.3) ** 2 + 1.0, 0.0, 1.0)
    assert x == pytest.approx(0.3, abs=1e-6)
    assert y == pytest.approx(1.0, abs=1e-12)


def test_edge_minimum_is_returned_exactly():
    x, y = golden_section_minimize(lambda t: t, 0.1, 0.9)
    assert x == 0.1
    assert y == 0.1


def test_flat_function_reports_the_midpoint():
    x, y = golden_section_minimize(lambda t: 0.42, 1e-6, 1 - 1e-6)
    assert x == pytest.approx(0.5, abs=1e-12)
    assert y == 0.42


def test_rounding_noise_does_not_push_argmin_to_an_edge():
    values = {1e-6: 0.42 - 1e-16, 1 - 1e-6: 0.42 - 2e-16}
    x, _ = golden_section_minimize(lambda t: values.get(t, 0.42), 1e-6, 1 - 1e-6)
    assert x == pytest.approx(0.5, abs=1e-12)


def test_degenerate_interval():
    x, y = golden_section_minimize(lambda t: t * t, 0.4, 0.4)
    assert x == 0.4
    assert y == pytest.approx(0.16)
