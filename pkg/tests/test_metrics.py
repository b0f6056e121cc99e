# -*- coding: utf-8 -*-

"""
Tests of returns, allocation and ensemble statistics
"""

# import external modules
import numpy as np
import pytest
from hypothesis import given, strategies as st

from pool_libs.header import InvalidInputError
from pool_libs.metrics import (
    per_period_rate, annualize, one_period_return, asset_return,
    trailing_annualized_return, allocation_ratio, quartiles,
    ensemble_stats, mean_and_standard_error
)


# ----- Rates ----- #
def test_per_period_rate_reference_value():
    assert per_period_rate(0.10, 12) == pytest.approx(0.00797414, abs=1e-8)


@given(st.floats(0.0, 2.0), st.integers(1, 365))
def test_annualize_inverts_per_period_rate(annual, periods_per_year):
    assert annualize(per_period_rate(annual, periods_per_year), periods_per_year) == pytest.approx(annual, abs=1e-9)


@pytest.mark.parametrize("annual,periods_per_year", [(-1.0, 12), (0.1, 0)])
def test_per_period_rate_invalid_inputs(annual, periods_per_year):
    with pytest.raises(InvalidInputError):
        per_period_rate(annual, periods_per_year)


# ----- Returns ----- #
def test_constant_quota_has_zero_returns():
    assert np.all(one_period_return([1.0] * 10) == 0.0)


def test_geometric_quota_returns():
    quota = 1.01 ** np.arange(20)
    assert np.allclose(one_period_return(quota), 0.01)
    assert np.allclose(asset_return(100.0 * quota), 0.01)


@pytest.mark.parametrize("quota", [[1.0], [], [1.0, 0.0, 1.0], [1.0, -2.0]])
def test_one_period_return_invalid_inputs(quota):
    with pytest.raises(InvalidInputError):
        one_period_return(quota)


def test_trailing_return_of_a_geometric_series():
    x = 0.008
    quota = (1.0 + x) ** np.arange(40)
    trailing = trailing_annualized_return(quota, 18, 12)
    assert np.all(np.isnan(trailing[:18]))
    assert np.allclose(trailing[18:], (1.0 + x) ** 12 - 1.0)


def test_trailing_return_with_short_history():
    assert np.all(np.isnan(trailing_annualized_return([1.0] * 18, 18)))
    trailing = trailing_annualized_return([1.0] * 19, 18)
    assert np.count_nonzero(~np.isnan(trailing)) == 1
    with pytest.raises(InvalidInputError):
        trailing_annualized_return([1.0] * 5, 0)


@given(st.lists(st.floats(0.5, 2.0), min_size=2, max_size=40), st.integers(1, 24))
def test_trailing_return_matches_compounded_one_period_returns(quota, window):
    trailing = trailing_annualized_return(quota, window, 12)
    returns = one_period_return(quota)
    for t in range(window, len(quota)):
        growth = np.prod(1.0 + returns[t - window:t])
        assert trailing[t] == pytest.approx(growth ** (12 / window) - 1.0, rel=1e-9, abs=1e-12)


# ----- Allocation ----- #
def test_allocation_ratio_is_clipped():
    ratio = allocation_ratio([0.0, 50.0, 120.0, -1.0, 5.0], [100.0, 100.0, 100.0, 100.0, 0.0])
    assert ratio.tolist() == [0.0, 0.5, 1.0, 0.0, 0.0]


def test_allocation_ratio_needs_matching_lengths():
    with pytest.raises(InvalidInputError):
        allocation_ratio([1.0], [1.0, 2.0])


# ----- Ensemble statistics ----- #
def test_quartiles_reference_values():
    assert quartiles([1, 2, 3, 4, 5]) == (1.5, 3.0, 4.5)
    assert quartiles([7.0]) == (7.0, 7.0, 7.0)


def test_ensemble_stats_reference_values():
    stats = ensemble_stats([[1.0], [2.0], [3.0], [4.0], [5.0]])
    assert stats.minimum[0] == 1.0
    assert stats.q1[0] == 1.5
    assert stats.median[0] == 3.0
    assert stats.q3[0] == 4.5
    assert stats.maximum[0] == 5.0
    assert stats.mean[0] == 3.0
    assert stats.iqr[0] == 3.0


def test_singleton_ensemble_collapses_on_the_series():
    series = [1.0, 1.5, 0.5]
    stats = ensemble_stats([series])
    for values in (stats.mean, stats.minimum, stats.q1, stats.median, stats.q3, stats.maximum):
        assert values.tolist() == series
    assert len(stats) == 3


def test_ensemble_stats_ignore_undefined_values():
    stats = ensemble_stats([[np.nan, 1.0], [np.nan, 3.0]])
    assert np.isnan(stats.mean[0])
    assert stats.mean[1] == 2.0
    assert set(stats.to_dict()) == {"mean", "min", "q1", "median", "q3", "max"}


def test_ensemble_stats_invalid_inputs():
    with pytest.raises(InvalidInputError):
        ensemble_stats([])
    with pytest.raises(InvalidInputError):
        ensemble_stats([[1.0, 2.0], [1.0]])


@given(st.lists(st.lists(st.floats(-1e6, 1e6), min_size=3, max_size=3), min_size=1, max_size=30))
def test_ensemble_stats_are_ordered(ensemble):
    stats = ensemble_stats(ensemble)
    assert np.all(stats.minimum <= stats.q1)
    assert np.all(stats.q1 <= stats.median)
    assert np.all(stats.median <= stats.q3)
    assert np.all(stats.q3 <= stats.maximum)
    assert np.all(stats.minimum <= stats.mean + 1e-6)
    assert np.all(stats.mean <= stats.maximum + 1e-6)


def test_mean_and_standard_error():
    mean, se = mean_and_standard_error([1.0, 2.0, 3.0, 4.0, 5.0, np.nan])
    assert mean == 3.0
    assert se == pytest.approx(np.sqrt(2.5 / 5))
    assert mean_and_standard_error([4.0]) == (4.0, 0.0)
    assert all(np.isnan(mean_and_standard_error([])))
