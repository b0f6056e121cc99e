# -*- coding: utf-8 -*-

"""
Tests of the reference scenario checks
"""

# import external modules
import pytest

from pool_libs import config
from pool_libs.header import InvalidInputError
from pool_libs.validation import (
    VALIDATION_CHECKS, CheckReport, run_checks,
    check_pricing_oracle
)


def test_every_reference_check_is_registered():
    assert list(VALIDATION_CHECKS) == [
        "no_borrowers",
        "full_allocation",
        "saturated_market",
        "pricing_oracle",
        "guarantor_hedging",
        "guarantor_neutrality",
        "rating_bias",
        "default_variance",
        "investor_flux",
        "spread_sweep",
        "determinism"
    ]


@pytest.mark.parametrize("name", ["no_borrowers", "investor_flux", "guarantor_hedging", "saturated_market"])
def test_deterministic_checks_pass(name):
    report, = run_checks([name], runs=1, seed=0)
    assert report.passed, str(report)


@pytest.mark.slow
def test_full_allocation_check():
    report, = run_checks(["full_allocation"], runs=1, seed=0)
    assert report.passed, str(report)
    assert 1.74 <= report.measured["terminal_ratio"] <= 1.768


@pytest.mark.slow
@pytest.mark.parametrize("name", ["guarantor_neutrality", "default_variance", "spread_sweep"])
def test_ensemble_checks(name):
    report, = run_checks([name], runs=config.ENSEMBLE_RUNS, seed=0, workers=4)
    assert report.passed, str(report)


@pytest.mark.slow
def test_rating_bias_check():
    report, = run_checks(["rating_bias"], runs=config.ENSEMBLE_RUNS, seed=0, workers=4)
    assert report.passed, str(report)
    measured = report.measured
    assert measured["mean_return_beta_2_80"] < 0
    assert measured["annualized_return_beta_2_200"] > 0
    assert abs(measured["annualized_return_beta_2_200"] - measured["annualized_adjusted_target"]) <= 0.01
    # the missed default rate keeps the plain target out of reach
    assert measured["annualized_gap_to_target"] > 0.01


def test_pricing_oracle_check():
    report = check_pricing_oracle(1, 0, 1, trials=20_000, z=4.0)
    assert report.measured["anchor"] == pytest.approx(81.30)
    assert report.passed, str(report)


@pytest.mark.slow
def test_determinism_check():
    report, = run_checks(["determinism"], runs=2, seed=3, workers=2)
    assert report.passed, str(report)


def test_unknown_check():
    with pytest.raises(InvalidInputError):
        run_checks(["does_not_exist"])


def test_report_formatting():
    report = CheckReport("demo", False, "x below 1", {"x": 1.23456789, "flag": True})
    assert str(report) == "[FAIL] demo: x=1.23457, flag=True (expected x below 1)"
    assert report.to_dict()["measured"]["flag"] is True
