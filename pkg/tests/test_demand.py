# -*- coding: utf-8 -*-

"""
Tests of the logistic acceptance curve
"""

# import external modules
import pytest
from hypothesis import given, strategies as st

from pool_libs.header import InvalidInputError
from pool_libs.pricing import ReceivableSchedule, RateSet, anticipation
from pool_libs.demand import DemandCurve, reference_anticipation, acceptance_probability


def test_reference_offer_is_accepted_half_the_time():
    assert acceptance_probability(DemandCurve(-10.0, 0.02), 80.0, 80.0) == pytest.approx(0.5)


@pytest.mark.parametrize("ratio,expected", [(0.8, 0.1192), (1.2, 0.8808)])
def test_acceptance_reference_values(ratio, expected):
    curve = DemandCurve(-10.0, 0.02)
    assert acceptance_probability(curve, ratio * 100.0, 100.0) == pytest.approx(expected, abs=1e-4)


@given(st.floats(-100.0, -0.01), st.floats(0.0, 1.0), st.floats(1.0, 1e4))
def test_acceptance_is_symmetric(phi, delta, A_0):
    curve = DemandCurve(phi, 0.0)
    above = acceptance_probability(curve, A_0 * (1 + delta), A_0)
    below = acceptance_probability(curve, A_0 * (1 - delta), A_0)
    assert above + below == pytest.approx(1.0, abs=1e-12)
    assert 0.0 <= below <= 0.5 <= above <= 1.0


def test_acceptance_is_stable_for_extreme_offers():
    curve = DemandCurve(-1000.0, 0.0)
    low = acceptance_probability(curve, 0.0, 1.0)
    high = acceptance_probability(curve, 10.0, 1.0)
    assert 0.0 < low < 1e-300
    assert 1.0 - 1e-15 < high < 1.0


@pytest.mark.parametrize("phi,s0", [(0.0, 0.02), (1.0, 0.02), (-1.0, -0.01), (float("nan"), 0.02)])
def test_invalid_curve(phi, s0):
    with pytest.raises(InvalidInputError):
        DemandCurve(phi, s0)


def test_reference_offer_needs_positive_value():
    with pytest.raises(InvalidInputError):
        acceptance_probability(DemandCurve(-10.0, 0.0), 1.0, 0.0)


def test_reference_anticipation_uses_reference_spread():
    schedule = ReceivableSchedule.equal(100.0, 3)
    curve = DemandCurve(-10.0, 0.0)
    assert reference_anticipation(schedule, 0.1, 0.0, curve) == pytest.approx(81.30)
    same_spread = DemandCurve(-10.0, 0.01)
    A = anticipation(schedule, 0.1, RateSet(0.005, 0.01))
    assert acceptance_probability(same_spread, A, reference_anticipation(schedule, 0.1, 0.005, same_spread)) \
        == pytest.approx(0.5)


def test_reference_offer_shrinks_with_longer_schedules():
    curve = DemandCurve(-10.0, 0.02)
    values = [reference_anticipation(ReceivableSchedule.equal(100.0, n), 0.1, 0.01, curve) for n in range(1, 13)]
    assert all(later < earlier for earlier, later in zip(values, values[1:]))
