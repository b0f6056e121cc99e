# -*- coding: utf-8 -*-

"""
Tests of the spread sweep and the best spread selection
"""

# import external modules
import numpy as np
import pandas as pd
import pytest

from pool_libs import config
from pool_libs.header import InvalidInputError, Objective
from pool_libs.engine.result import RunResult
from pool_libs.optimizer import SweepCandidate, SweepResult, objective_value, sweep_spread, select_best


def _result(book: list[float], originated: list[float]) -> RunResult:
    series = pd.DataFrame({"loan_book_value": book, "originated_volume": originated})
    return RunResult(0, 0, series, pd.DataFrame(columns=["period", "type", "amount"]))


def _sweep(means: dict[float, list[float]]) -> SweepResult:
    return SweepResult([SweepCandidate(spread, np.array(samples)) for spread, samples in means.items()])


@pytest.mark.parametrize("objective,expected", [
    (Objective.MEAN, 20.0),
    (Objective.TERMINAL, 30.0),
    (Objective.CUMULATIVE, 12.0),
])
def test_objective_values(objective, expected):
    result = _result([0.0, 10.0, 20.0, 30.0], [0.0, 10.0, 2.0, 0.0])
    assert objective_value(result, objective) == pytest.approx(expected)


def test_zero_horizon_objective():
    assert objective_value(_result([5.0], [0.0]), Objective.MEAN) == 5.0


def test_select_best_takes_the_highest_mean():
    assert select_best(_sweep({0.1: [10.0], 0.2: [20.0], 0.3: [15.0]})) == 0.2


def test_select_best_ties_go_to_the_lowest_spread():
    assert select_best(_sweep({0.3: [20.0], 0.1: [20.0], 0.2: [15.0]})) == 0.1


def test_select_best_prefers_lower_spreads_within_one_standard_error():
    sweep = _sweep({0.1: [19.0, 19.0], 0.2: [18.0, 22.0]})
    assert sweep.candidates[1].standard_error == pytest.approx(2.0)
    assert select_best(sweep) == 0.1


def test_single_candidate_is_the_best():
    assert select_best(_sweep({0.7: [3.0]})) == 0.7


def test_relative_volumes():
    sweep = _sweep({0.1: [10.0], 0.2: [25.0], 0.3: [5.0]})
    assert sweep.relative_volumes.tolist() == [2.0, 5.0, 1.0]
    assert np.all(np.isnan(_sweep({0.1: [0.0], 0.2: [1.0]}).relative_volumes))


def test_sweep_frame_layout():
    frame = _sweep({0.1: [1.0, 2.0], 0.2: [3.0, 4.0]}).to_frame()
    assert list(frame.columns) == config.SWEEP_COLUMNS
    assert frame["run"].tolist() == [0, 1, 0, 1]


@pytest.mark.parametrize("spreads", [[], [0.1, 0.1]])
def test_sweep_rejects_bad_grids(market, spreads):
    with pytest.raises(InvalidInputError):
        sweep_spread(market(), spreads, 1, 0)


def test_select_best_of_empty_sweep():
    with pytest.raises(InvalidInputError):
        select_best(SweepResult([]))


def test_sweep_uses_common_random_numbers(market):
    scenario = market(
        horizon=6,
        defaults={"fixed": None, "beta_a": 2.0, "beta_b": 150.0},
        demand={"always_accept": False, "phi": -30.0, "s0": 0.3}
    )
    first = sweep_spread(scenario, [0.1, 0.6], 2, 4)
    second = sweep_spread(scenario, [0.1, 0.6], 2, 4)
    for a, b in zip(first.candidates, second.candidates):
        assert np.array_equal(a.samples, b.samples)
    assert first.spreads == [0.1, 0.6]
    assert select_best(first) in (0.1, 0.6)
