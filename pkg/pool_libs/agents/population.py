# -*- coding: utf-8 -*-

"""
RECEIVABLES POOL libs
____________________________________________________________________________________________________
Agents libs Population
version : 1.0
____________________________________________________________________________________________________
Spawning of borrowers, guarantors and investors from scenario distributions
____________________________________________________________________________________________________
(c) Lafiteau Franck
"""

# importing external modules
from __future__ import annotations
from typing import Optional, TYPE_CHECKING
import numpy as np

# import logger
from .. import logger

# import header
from ..header import BorrowerMode, InvestorStatus

# import metrics for rate conversion
from ..metrics import per_period_rate

# import components
from .components import BorrowerSpec, GuarantorSpec, InvestorSpec, InvestorState

if TYPE_CHECKING:
    from ..engine.scenario import ScenarioConfig


def spawn_guarantor(config: ScenarioConfig, gid: int, rng: np.random.Generator) -> GuarantorSpec:
    """
    Create the guarantor backing borrower gid
    """
    guarantors = config.guarantors
    V_c = guarantors.collateral.sample(rng)
    s_g = per_period_rate(guarantors.s_g.sample(rng), config.periods_per_year)
    return GuarantorSpec(gid, V_c, s_g, guarantors.rating.model())


def spawn_borrowers(config: ScenarioConfig,
                    period: int,
                    rng: np.random.Generator,
                    active_count: int,
                    first_id: int,
                    guarantor_rng: Optional[np.random.Generator]=None) -> list[BorrowerSpec]:
    """
    Create the borrowers entering at period.

    constant and recurring modes top the population up to its configured size,
    arrivals mode adds a sampled per-period count.
    Draw order per borrower: p_true, schedule total, N, guarantor flag.
    """
    borrowers_cfg = config.borrowers
    if borrowers_cfg.mode is BorrowerMode.ARRIVALS:
        count = int(borrowers_cfg.arrivals.sample(rng))
    else:
        count = max(borrowers_cfg.size - active_count, 0)

    guarantor_rng = guarantor_rng if guarantor_rng is not None else rng
    spawned: list[BorrowerSpec] = []
    for bid in range(first_id, first_id + count):
        p_true = config.defaults.sample(rng)
        total = borrowers_cfg.schedule_total.sample(rng)
        n = int(round(borrowers_cfg.n_installments.sample(rng)))
        has_guarantor = bool(rng.random() < config.guarantors.frequency)
        guarantor = spawn_guarantor(config, bid, guarantor_rng) if has_guarantor else None
        spawned.append(BorrowerSpec(bid, p_true, total, n, has_guarantor, guarantor, entry_period=period))

    if spawned:
        logger.debug(f"[Population] {len(spawned)} borrowers spawned at period {period}")
    return spawned


def spawn_investor(config: ScenarioConfig,
                   iid: int,
                   period: int,
                   rng: np.random.Generator) -> InvestorState:
    """
    Create an arriving investor, not yet invested
    """
    investors = config.investors
    spec = InvestorSpec(
        id=iid,
        amount=investors.amount.sample(rng),
        expected_return=investors.expected_return.sample(rng),
        eval_window=investors.eval_window,
        profit_withdraw_rate=investors.profit_withdraw_rate.sample(rng),
        loss_withdraw_rate=investors.loss_withdraw_rate.sample(rng),
        min_holding=int(round(investors.min_holding.sample(rng))),
        enter_blind=investors.enter_blind
    )
    return InvestorState(spec, arrival_period=period)


def spawn_seed_investor(config: ScenarioConfig) -> InvestorState:
    """
    Create the initial liquidity provider, already invested at t=0
    """
    investors = config.investors
    spec = InvestorSpec(
        id=0,
        amount=investors.seed_amount,
        eval_window=investors.eval_window,
        is_seed=True,
        permanent=investors.seed_permanent
    )
    return InvestorState(spec, arrival_period=0, status=InvestorStatus.INVESTED, entry_period=0)


def investor_arrivals(config: ScenarioConfig, rng: np.random.Generator) -> int:
    """
    Number of new investors showing up this period
    """
    return int(config.investors.arrivals.sample(rng))


__all__ = [
    "spawn_guarantor",
    "spawn_borrowers",
    "spawn_investor",
    "spawn_seed_investor",
    "investor_arrivals"
]
