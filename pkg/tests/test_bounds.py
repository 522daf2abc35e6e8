"""Tests de las cotas de Helstrom y del número de copias."""

import math

import pytest

from app.core.errors import DomainError
from app.distinguishability.bounds import (
    bhattacharyya_bound,
    bures_distance_sq,
    copies_needed,
    fidelity_lower_bound,
    helstrom_bounds,
    hellinger_distance_sq,
    pure_perr,
    qcb_from_hellinger,
)
from app.distinguishability.fidelity import uhlmann_fidelity
from app.gaussian.states import make_coherent_thermal, make_sts, make_tss, pi_half_pair
from app.schemas.metrics import MetricReport


def _fixed_report(fidelity: float, qcb_value: float):
    def report(copies: int) -> MetricReport:
        bound = 0.5 * (2 * qcb_value) ** copies
        return MetricReport(
            fidelity=fidelity ** copies,
            affinity=2 * qcb_value,
            t_star=0.5,
            qcb=bound,
            lbp=min(fidelity_lower_bound(fidelity, copies), bound),
            ubp=bound,
            copies=copies,
        )

    return report


def test_helstrom_bounds_for_tmsv(tmsv_pair, tmsv_fidelity):
    report = helstrom_bounds(*tmsv_pair)
    assert report.fidelity == pytest.approx(tmsv_fidelity, rel=1e-10)
    assert report.ubp == report.qcb
    assert report.qcb == pytest.approx(1.0 / (1.0 + math.cosh(1.0) ** 2), rel=1e-9)
    assert report.lbp == pytest.approx(0.5 * (1 - math.sqrt(1 - tmsv_fidelity)), rel=1e-9)
    assert report.lbp <= report.ubp


def test_helstrom_bounds_for_tss(tss_symmetric):
    report = helstrom_bounds(*pi_half_pair(tss_symmetric))
    a, c = 3.2, 2 * math.sqrt(0.11)
    root = math.sqrt((c * c - a * a) ** 2 + 1 + 2 * a * a)
    assert report.fidelity == pytest.approx(4 / (1 + c * c - a * a + root) ** 2, rel=1e-9)
    assert report.fidelity == pytest.approx(0.9605, abs=1e-4)
    assert report.lbp == pytest.approx(0.5 * (1 - math.sqrt(1 - report.fidelity)), rel=1e-12)
    assert report.lbp <= report.ubp


def test_identical_states_give_one_half():
    state = make_sts(0.4, 0.3, 0.2)
    report = helstrom_bounds(state, state)
    assert report.lbp == pytest.approx(0.5)
    assert report.ubp == pytest.approx(0.5)


def test_bounds_tighten_with_copies(sts_symmetric):
    pair = pi_half_pair(sts_symmetric)
    one, five = helstrom_bounds(*pair), helstrom_bounds(*pair, copies=5)
    assert five.copies == 5
    assert five.ubp < one.ubp
    assert five.lbp == pytest.approx(fidelity_lower_bound(one.fidelity, 5), rel=1e-9)
    assert five.lbp <= five.ubp


def test_bhattacharyya_dominates_qcb():
    pair = pi_half_pair(make_coherent_thermal(0.9, 0.4, 0.0))
    assert helstrom_bounds(*pair).qcb <= bhattacharyya_bound(*pair) + 1e-12


def test_pure_perr(tmsv_pair, tmsv_fidelity):
    assert pure_perr(*tmsv_pair) == pytest.approx(0.5 * (1 - math.sqrt(1 - tmsv_fidelity)), rel=1e-9)
    coherent = make_coherent_thermal(math.sqrt(0.543081), 0.0, 0.0)
    expected = 0.5 * (1 - math.sqrt(1 - math.exp(-2 * 0.543081)))
    assert pure_perr(*pi_half_pair(coherent)) == pytest.approx(expected, rel=1e-9)
    assert pure_perr(coherent, coherent) == pytest.approx(0.5)


def test_pure_perr_rejects_mixed_states(sts_symmetric):
    with pytest.raises(DomainError):
        pure_perr(*pi_half_pair(sts_symmetric))


def test_hellinger_relation_gives_qcb(sts_asymmetric):
    pair = pi_half_pair(sts_asymmetric)
    assert qcb_from_hellinger(hellinger_distance_sq(*pair)) == pytest.approx(helstrom_bounds(*pair).qcb, rel=1e-12)


def test_bures_distance(tss_symmetric):
    pair = pi_half_pair(tss_symmetric)
    assert bures_distance_sq(*pair) == pytest.approx(2 * (1 - math.sqrt(uhlmann_fidelity(*pair))))


def test_copies_needed_upper_and_lower():
    report = _fixed_report(fidelity=0.5, qcb_value=0.25)
    assert copies_needed(report, 0.01, "upper") == math.ceil(math.log(0.02) / math.log(0.5))
    assert copies_needed(report, 0.01, "lower") == 5
    assert copies_needed(report, 0.5, "upper") == 1
    assert copies_needed(report, 0.5, "lower") == 1


def test_copies_needed_on_exact_power():
    report = _fixed_report(fidelity=0.9, qcb_value=0.25)
    # 0.5 * 0.5**3 = 1/16 exactly
    assert copies_needed(report, 1.0 / 16.0, "upper") == 3


def test_copies_needed_rejects_bad_input():
    report = _fixed_report(fidelity=0.5, qcb_value=0.25)
    with pytest.raises(DomainError):
        copies_needed(report, 0.6, "upper")
    with pytest.raises(DomainError):
        copies_needed(report, 0.1, "middle")
    with pytest.raises(DomainError):
        copies_needed(_fixed_report(fidelity=1.0, qcb_value=0.5), 0.1, "lower")


def test_copies_for_tss_reach_target(tss_symmetric):
    pair = pi_half_pair(tss_symmetric)
    copies = copies_needed(lambda n: helstrom_bounds(*pair, n), 0.125, "lower")
    assert helstrom_bounds(*pair, copies).lbp <= 0.125
    assert helstrom_bounds(*pair, copies - 1).lbp > 0.125


def test_metric_report_rejects_inverted_bounds():
    with pytest.raises(ValueError):
        MetricReport(fidelity=0.5, affinity=0.6, t_star=0.5, qcb=0.1, lbp=0.2, ubp=0.1)


def test_make_tss_noise_reduces_fidelity_distance():
    quiet = helstrom_bounds(*pi_half_pair(make_tss(0.5, 0.0, 0.0)))
    noisy = helstrom_bounds(*pi_half_pair(make_tss(0.5, 2.0, 2.0)))
    assert noisy.fidelity > quiet.fidelity
