# -*- coding: utf-8 -*-

"""
RECEIVABLES POOL libs
____________________________________________________________________________________________________
Engine libs Phases
version : 1.0
____________________________________________________________________________________________________
Contains the phases executed at each simulation period
____________________________________________________________________________________________________
(c) Lafiteau Franck
"""

# import external modules
from __future__ import annotations
from typing import TYPE_CHECKING
from math import nan

# import logger
from .. import logger

# import header
from ..header import BorrowerMode, InvestorAction, InvestorStatus, OfferChoice, TransactionType as T

# import libs
from ..pricing import anticipation, anticipation_with_guarantor, select_offer
from ..credit_model import estimate_default_prob, sample_payment_outcome
from ..demand import reference_anticipation, acceptance_probability
from ..ledger.contract import LoanContract
from ..agents.components import BorrowerSpec, InvestorState
from ..agents.policies import guarantor_offer, investor_decision
from ..agents.population import spawn_borrowers, spawn_investor, investor_arrivals

# import registry
from .registry import phase

if TYPE_CHECKING:
    from .engine import SimulationState


# ----- Accrual ----- #
@phase("accrual_phase")
def accrual_phase(state: SimulationState, period: int) -> None:
    """
    Idle cash earns the base rate
    """
    state.ledger.accrue(period, state.rates.r)


# ----- Collection ----- #
@phase("collection_phase")
def collection_phase(state: SimulationState, period: int) -> None:
    """
    Installments, defaults and guarantor settlements, then borrower turnover
    """
    summary = state.ledger.process_period(period)
    state.period_defaults = summary.defaults
    for contract in summary.closed:
        borrower = state.borrowers.get(contract.borrower_id)
        if borrower is None:
            continue
        borrower.active_loan = None
        borrower.closed_period = period
        if state.config.borrowers.mode is not BorrowerMode.RECURRING:
            del state.borrowers[borrower.id]


# ----- Investors ----- #
def _withdraw(state: SimulationState, investor: InvestorState, period: int) -> None:
    paid = state.ledger.withdraw(investor.id)
    if investor.id in state.ledger.holdings:
        investor.status = InvestorStatus.WITHDRAWING
        logger.debug(f"[Investor {investor.id}] partially withdrawn ({paid:.4f}) at period {period}")
    else:
        investor.status = InvestorStatus.DEPARTED


def _enter(state: SimulationState, investor: InvestorState, period: int) -> None:
    state.ledger.deposit(investor.id, investor.spec.amount)
    investor.status = InvestorStatus.INVESTED
    investor.entry_period = period


@phase("investor_phase")
def investor_phase(state: SimulationState, period: int) -> None:
    """
    Holders decide first, then arrivals join the prospects which may enter
    """
    rng = state.streams.investors
    max_wait = state.config.investors.max_wait

    for investor in state.investors:
        if investor.status is InvestorStatus.WITHDRAWING:
            _withdraw(state, investor, period)
        elif investor.status is InvestorStatus.INVESTED:
            action = investor_decision(
                investor.spec,
                investor.holding_age(period),
                state.trailing_return(investor.spec.eval_window),
                rng
            )
            if action is InvestorAction.WITHDRAW:
                _withdraw(state, investor, period)

    for _ in range(investor_arrivals(state.config, rng)):
        state.investors.append(spawn_investor(state.config, state.next_investor_id, period, rng))
        state.next_investor_id += 1

    for investor in state.investors:
        if investor.status is not InvestorStatus.PROSPECT:
            continue
        if period - investor.arrival_period > max_wait:
            investor.status = InvestorStatus.DEPARTED
            continue
        action = investor_decision(investor.spec, None, state.trailing_return(investor.spec.eval_window), rng)
        if action is InvestorAction.INVEST:
            _enter(state, investor, period)

    state.investors = [inv for inv in state.investors if inv.status is not InvestorStatus.DEPARTED]


# ----- Originations ----- #
def request_anticipation(state: SimulationState, borrower: BorrowerSpec, period: int) -> bool:
    """
    Price, offer and fund one anticipation request. Random draws happen in a
    fixed order whatever the outcome: rating, payment path, guarantor rating, demand.
    """
    streams = state.streams
    config = state.config
    rates = state.rates
    schedule = borrower.schedule

    p_est = estimate_default_prob(state.rating_model, borrower.p_true, streams.rating)
    outcome = sample_payment_outcome(borrower.p_true, schedule.last_period, streams.outcomes)
    A_plain = anticipation(schedule, p_est, rates)

    terms = None
    A_guaranteed = None
    if borrower.guarantor is not None:
        terms = guarantor_offer(borrower.guarantor, borrower, rates.r, schedule.N, streams.guarantors)
        if terms is not None:
            A_guaranteed = anticipation_with_guarantor(schedule, p_est, rates, terms)

    choice = select_offer(
        A_plain, A_guaranteed,
        config.improvement_threshold,
        p_est, config.p_refuse,
        config.guarantors.force
    )
    u = streams.demand.random()

    if choice is OfferChoice.NONE:
        state.period_refused += 1
        logger.debug(f"[Origination] Borrower {borrower.id} refused at period {period} (p={p_est:.4f})")
        return False

    value = A_guaranteed if choice is OfferChoice.GUARANTEED else A_plain
    if not config.demand.always_accept:
        A_0 = reference_anticipation(schedule, p_est, rates.r, state.demand_curve)
        if u >= acceptance_probability(state.demand_curve, value, A_0):
            state.period_declined += 1
            return False

    contract = LoanContract(
        borrower.id, schedule, value, p_est, rates, period, outcome,
        terms if choice is OfferChoice.GUARANTEED else None
    )
    if not state.ledger.originate(contract):
        state.period_unfunded += 1
        return False

    borrower.active_loan = contract
    state.period_originated_volume += value
    state.period_originated_count += 1
    return True


@phase("origination_phase")
def origination_phase(state: SimulationState, period: int) -> None:
    """
    Spawn borrowers then process every idle borrower's request in id order
    """
    config = state.config
    spawned = spawn_borrowers(
        config, period,
        state.streams.borrowers,
        len(state.borrowers),
        state.next_borrower_id,
        state.streams.guarantors
    )
    for borrower in spawned:
        state.borrowers[borrower.id] = borrower
    state.next_borrower_id += len(spawned)

    leaving: list[int] = []
    for borrower in state.borrowers.values():
        if not borrower.can_request(period):
            continue
        originated = request_anticipation(state, borrower, period)
        if not originated and config.borrowers.mode is BorrowerMode.ARRIVALS:
            leaving.append(borrower.id)
    for bid in leaving:
        del state.borrowers[bid]


# ----- Metrics ----- #
@phase("metrics_phase")
def metrics_phase(state: SimulationState, period: int) -> None:
    """
    Record the period row of the run series
    """
    ledger = state.ledger
    total, quota = ledger.valuation(period)
    book = ledger.loan_book_value(period)
    previous = state.quota_history[-1] if state.quota_history else None
    state.quota_history.append(quota)

    volumes = {f"volume_{ttype.value}": 0.0 for ttype in T}
    for transaction in ledger.transactions[state.transaction_cursor:]:
        volumes[f"volume_{transaction.type.value}"] += transaction.amount
    state.transaction_cursor = len(ledger.transactions)

    state.rows.append({
        "period": period,
        "cash": ledger.cash,
        "loan_book_value": book,
        "collateral_liability": ledger.liabilities(period),
        "total_assets": total,
        "quota_value": quota,
        "one_period_return": quota / previous - 1.0 if previous else nan,
        "trailing_return": state.trailing_return(state.config.metric_window),
        "allocation_ratio": min(max(book / total, 0.0), 1.0) if total > 0 else 0.0,
        "investor_count": sum(1 for inv in state.investors if inv.invested),
        "borrower_count": len(state.borrowers),
        "originated_volume": state.period_originated_volume,
        "originated_count": state.period_originated_count,
        "default_count": state.period_defaults,
        "refused_count": state.period_refused,
        "declined_count": state.period_declined,
        "unfunded_count": state.period_unfunded,
        **volumes
    })
