# -*- coding: utf-8 -*-

"""
Tests of the anticipation pricing formulas, the offer rule and the payment oracle
"""

# import external modules
import numpy as np
import pytest
from hypothesis import given, strategies as st

from pool_libs.header import InvalidInputError, OfferChoice
from pool_libs.pricing import (
    ReceivableSchedule, RateSet, GuarantorTerms,
    anticipation, guarantor_gain, anticipation_with_guarantor,
    select_offer, sample_default_periods, payment_oracle
)

probabilities = st.floats(min_value=0.0, max_value=0.95)
small_rates = st.floats(min_value=0.0, max_value=0.2)
totals = st.floats(min_value=1.0, max_value=1e4)
installment_counts = st.integers(min_value=1, max_value=24)


# ----- Schedules and rates ----- #
def test_equal_schedule():
    schedule = ReceivableSchedule.equal(100.0, 4)
    assert schedule.N == 4
    assert schedule.last_period == 4
    assert schedule.total() == pytest.approx(100.0)
    assert [period for period, _ in schedule.installments] == [1, 2, 3, 4]


@pytest.mark.parametrize("installments", [
    (),
    ((0, 10.0),),
    ((1, 10.0), (1, 10.0)),
    ((2, 10.0), (1, 10.0)),
    ((1, 0.0),),
    ((1, -5.0),),
])
def test_invalid_schedule(installments):
    with pytest.raises(InvalidInputError):
        ReceivableSchedule(installments)


def test_equal_schedule_needs_one_installment():
    with pytest.raises(InvalidInputError):
        ReceivableSchedule.equal(100.0, 0)


@pytest.mark.parametrize("r,s", [(-0.01, 0.0), (0.0, -0.01), (float("nan"), 0.0)])
def test_invalid_rates(r, s):
    with pytest.raises(InvalidInputError):
        RateSet(r, s)


# ----- Plain anticipation ----- #
def test_anticipation_without_risk_nor_rates_is_the_total():
    assert anticipation(ReceivableSchedule.equal(100.0, 4), 0.0, RateSet(0.0, 0.0)) == pytest.approx(100.0)


def test_anticipation_reference_values():
    schedule = ReceivableSchedule.equal(100.0, 3)
    assert anticipation(schedule, 0.1, RateSet(0.0, 0.0)) == pytest.approx(81.30, rel=1e-12)
    assert anticipation(schedule, 0.1, RateSet(0.1, 0.1)) == pytest.approx(57.8125, rel=1e-12)


def test_anticipation_gap_schedule_uses_period_indices():
    schedule = ReceivableSchedule(((2, 50.0), (5, 50.0)))
    expected = 50.0 * 0.9 ** 2 + 50.0 * 0.9 ** 5
    assert anticipation(schedule, 0.1, RateSet(0.0, 0.0)) == pytest.approx(expected)


@pytest.mark.parametrize("p", [-0.1, 1.1, float("nan")])
def test_anticipation_rejects_invalid_probability(p):
    with pytest.raises(InvalidInputError):
        anticipation(ReceivableSchedule.equal(100.0, 3), p, RateSet(0.0, 0.0))


def test_certain_default_is_worth_nothing():
    assert anticipation(ReceivableSchedule.equal(100.0, 3), 1.0, RateSet(0.01, 0.01)) == 0.0


@given(totals, installment_counts, probabilities, small_rates, small_rates)
def test_anticipation_bounded_by_total(total, N, p, r, s):
    value = anticipation(ReceivableSchedule.equal(total, N), p, RateSet(r, s))
    assert 0.0 <= value <= total * (1 + 1e-12)


@given(totals, installment_counts, st.floats(0.0, 0.9), st.floats(0.001, 0.05), small_rates, small_rates)
def test_anticipation_decreases_with_risk_and_rates(total, N, p, dp, r, s):
    schedule = ReceivableSchedule.equal(total, N)
    base = anticipation(schedule, p, RateSet(r, s))
    assert anticipation(schedule, p + dp, RateSet(r, s)) < base
    assert anticipation(schedule, p, RateSet(r, s + dp)) < base
    assert anticipation(schedule, p, RateSet(r + dp, s)) < base


# ----- Guarantors ----- #
def test_guarantor_gain_reference_value():
    assert guarantor_gain(50.0, 0.05, 0.02, 0.0, 3) == pytest.approx(11.887, abs=1e-3)


def test_guarantor_gain_is_zero_without_risk_nor_spread():
    assert guarantor_gain(50.0, 0.0, 0.0, 0.01, 6) == pytest.approx(0.0, abs=1e-12)


@given(st.floats(0.1, 1e3), st.floats(0.0, 0.5), st.floats(0.0, 0.05), small_rates, installment_counts)
def test_guarantor_gain_is_linear_in_collateral(V_c, p_g, s_g, r, N):
    single = guarantor_gain(V_c, p_g, s_g, r, N)
    assert guarantor_gain(2.0 * V_c, p_g, s_g, r, N) == pytest.approx(2.0 * single, rel=1e-9, abs=1e-9)


@given(st.floats(0.1, 1e3), st.floats(0.0, 0.5), st.floats(0.0, 0.05), small_rates, installment_counts)
def test_guarantor_gain_makes_the_guarantor_indifferent(V_c, p_g, s_g, r, N):
    G_s = guarantor_gain(V_c, p_g, s_g, r, N)
    expected_receipt = (1.0 - p_g) ** N * (V_c * (1.0 + r) ** N + G_s)
    assert expected_receipt == pytest.approx(V_c * (1.0 + r + s_g) ** N, rel=1e-9)


@pytest.mark.parametrize("p_g,N", [(1.0, 3), (1.5, 3), (0.1, 0)])
def test_guarantor_gain_invalid_inputs(p_g, N):
    with pytest.raises(InvalidInputError):
        guarantor_gain(50.0, p_g, 0.0, 0.0, N)


def test_guarantor_terms_validation():
    with pytest.raises(InvalidInputError):
        GuarantorTerms(-1.0, 0.1, 0.0)
    with pytest.raises(InvalidInputError):
        GuarantorTerms(1.0, 1.0, 0.0)
    with pytest.raises(InvalidInputError):
        GuarantorTerms(1.0, 0.1, -0.01)


def test_guaranteed_reference_value():
    schedule = ReceivableSchedule.equal(100.0, 3)
    terms = GuarantorTerms.quote(50.0, 0.05, 0.02, 0.0, 3)
    assert anticipation_with_guarantor(schedule, 0.1, RateSet(0.0, 0.0), terms) == pytest.approx(86.18, abs=0.05)


@given(totals, installment_counts, probabilities, small_rates, small_rates)
def test_zero_collateral_matches_plain_offer(total, N, p, r, s):
    schedule = ReceivableSchedule.equal(total, N)
    terms = GuarantorTerms.quote(0.0, 0.1, 0.01, r, N)
    assert anticipation_with_guarantor(schedule, p, RateSet(r, s), terms) == pytest.approx(
        anticipation(schedule, p, RateSet(r, s)), rel=1e-9, abs=1e-12
    )


def test_optimistic_guarantor_improves_the_offer():
    schedule = ReceivableSchedule.equal(100.0, 6)
    rates = RateSet(0.008, 0.008)
    terms = GuarantorTerms.quote(200.0, 0.05, 0.0, rates.r, schedule.N)
    assert anticipation_with_guarantor(schedule, 0.2, rates, terms) > anticipation(schedule, 0.2, rates)


# ----- Offer selection ----- #
@pytest.mark.parametrize("A_guaranteed,expected", [
    (90.0, OfferChoice.GUARANTEED),
    (87.0, OfferChoice.PLAIN),
    (88.0, OfferChoice.GUARANTEED),
    (None, OfferChoice.PLAIN),
])
def test_select_offer_threshold(A_guaranteed, expected):
    assert select_offer(80.0, A_guaranteed, 0.10) is expected


def test_select_offer_forced_guarantor():
    assert select_offer(80.0, 81.0, 0.10, force_guarantor=True) is OfferChoice.GUARANTEED


def test_select_offer_refusals():
    assert select_offer(80.0, 90.0, 0.10, p=0.6, p_refuse=0.5) is OfferChoice.NONE
    assert select_offer(0.0, None, 0.10) is OfferChoice.NONE
    assert select_offer(80.0, 90.0, 0.10, p=0.5, p_refuse=0.5) is OfferChoice.GUARANTEED


def test_select_offer_rejects_negative_threshold():
    with pytest.raises(InvalidInputError):
        select_offer(80.0, 90.0, -0.1)


# ----- Payment oracle ----- #
def test_default_periods_without_risk_are_infinite(rng):
    assert np.all(np.isinf(sample_default_periods(0.0, 100, rng)))


def test_oracle_riskless_receipts_are_the_total(rng):
    schedule = ReceivableSchedule.equal(100.0, 4)
    platform, guarantor = payment_oracle(schedule, 0.0, rng, 1000)
    assert np.allclose(platform, 100.0)
    assert np.all(guarantor == 0.0)


def test_oracle_guarantor_paid_only_on_survival(rng):
    schedule = ReceivableSchedule.equal(100.0, 3)
    terms = GuarantorTerms.quote(50.0, 0.05, 0.02, 0.0, 3)
    _, guarantor = payment_oracle(schedule, 0.1, rng, 20_000, RateSet(0.0, 0.0), terms)
    paid = guarantor[guarantor > 0]
    assert np.allclose(paid, terms.settlement(0.0, 3))
    assert paid.size / guarantor.size == pytest.approx(0.9 ** 3, abs=0.02)


def _cases(count: int, seed: int):
    generator = np.random.default_rng(seed)
    cases = []
    for _ in range(count):
        schedule = ReceivableSchedule.equal(float(generator.uniform(10.0, 1000.0)), int(generator.integers(1, 13)))
        p = float(generator.uniform(0.0, 0.3))
        terms = GuarantorTerms.quote(
            float(generator.uniform(0.0, schedule.total())),
            float(generator.uniform(0.0, 0.3)),
            float(generator.uniform(0.0, 0.05)),
            0.0, schedule.N
        )
        cases.append((schedule, p, terms))
    return cases


@pytest.mark.parametrize("schedule,p,terms", _cases(8, seed=7))
def test_oracle_mean_matches_closed_forms(schedule, p, terms):
    rates = RateSet(0.0, 0.0)
    trials = 50_000
    for case_terms, closed in (
        (None, anticipation(schedule, p, rates)),
        (terms, anticipation_with_guarantor(schedule, p, rates, terms)),
    ):
        platform, _ = payment_oracle(schedule, p, np.random.default_rng(99), trials, rates, case_terms)
        se = platform.std(ddof=1) / np.sqrt(trials)
        assert abs(platform.mean() - closed) <= 4.0 * se + 1e-9
