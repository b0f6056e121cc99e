# -*- coding: utf-8 -*-

"""
RECEIVABLES POOL libs
____________________________________________________________________________________________________
Agents libs Policies
version : 1.0
____________________________________________________________________________________________________
Decision rules of guarantors and investors
____________________________________________________________________________________________________
(c) Lafiteau Franck
"""

# importing external modules
from __future__ import annotations
from typing import Optional
from math import isfinite
import numpy as np

# import logger
from .. import logger

# import header
from ..header import InvestorAction, InvalidInputError

# import pricing and credit model
from ..pricing import GuarantorTerms
from ..credit_model import estimate_default_prob

# import components
from .components import GuarantorSpec, BorrowerSpec, InvestorSpec


def guarantor_offer(g: GuarantorSpec,
                    borrower: BorrowerSpec,
                    r: float,
                    N: int,
                    rng: np.random.Generator) -> Optional[GuarantorTerms]:
    """
    Quote the terms a guarantor asks for a borrower, None when it declines.
    The guarantor rates the borrower with its own model, then asks the G_s
    making it indifferent at (p_g, s_g).
    """
    if not borrower.has_guarantor:
        raise InvalidInputError(f"Borrower {borrower.id} has no guarantor")
    p_g = estimate_default_prob(g.rating, borrower.p_true, rng)
    if p_g >= 1.0:
        logger.debug(f"[Guarantor {g.id}] declines borrower {borrower.id} (p_g={p_g})")
        return None
    return GuarantorTerms.quote(g.V_c, p_g, g.s_g, r, N)


def _defined(x: Optional[float]) -> bool:
    return x is not None and isfinite(x)


def investor_decision(inv: InvestorSpec,
                      holding_age: Optional[int],
                      trailing_return: Optional[float],
                      rng: np.random.Generator) -> InvestorAction:
    """
    Decide what an investor does this period.

    holding_age is None before entry. trailing_return is the fund's annualized
    return over inv.eval_window, None or NaN while history is too short.
    """
    meets_target = _defined(trailing_return) and trailing_return >= inv.expected_return

    if holding_age is None:
        if not _defined(trailing_return):
            return InvestorAction.INVEST if inv.enter_blind else InvestorAction.HOLD
        return InvestorAction.INVEST if meets_target else InvestorAction.HOLD

    if inv.permanent or holding_age < inv.min_holding:
        return InvestorAction.HOLD

    # undefined history counts as a loss
    rate = inv.profit_withdraw_rate if meets_target else inv.loss_withdraw_rate
    if rng.random() < rate:
        return InvestorAction.WITHDRAW
    return InvestorAction.HOLD


__all__ = [
    "guarantor_offer",
    "investor_decision"
]
