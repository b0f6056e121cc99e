# -*- coding: utf-8 -*-

"""
RECEIVABLES POOL libs - Header
Minimal runtime header. Shared enums and the input error live here.
All other types are defined in their respective modules.
"""

from __future__ import annotations

from enum import Enum


class InvalidInputError(ValueError):
    """Raised when an operation receives inputs outside its domain."""


class ScenarioError(InvalidInputError):
    """Raised when a scenario document fails validation. Lists every offending field."""


class TransactionType(str, Enum):
    """Enum for every liquidity pool transaction kind"""
    DEPOSIT = "deposit"
    WITHDRAWAL = "withdrawal"
    ANTICIPATION = "anticipation"
    INSTALLMENT = "installment"
    COLLATERAL_IN = "collateral_in"
    COLLATERAL_SETTLEMENT = "collateral_settlement"
    COLLATERAL_FORFEIT = "collateral_forfeit"
    GUARANTOR_GAIN_OUT = "guarantor_gain_out"
    ACCRUAL = "accrual"

    @property
    def cash_sign(self) -> int:
        """Sign of the cash movement carried by this kind (0 for book-only records)."""
        return _CASH_SIGNS[self]


_CASH_SIGNS: dict[TransactionType, int] = {
    TransactionType.DEPOSIT: 1,
    TransactionType.WITHDRAWAL: -1,
    TransactionType.ANTICIPATION: -1,
    TransactionType.INSTALLMENT: 1,
    TransactionType.COLLATERAL_IN: 1,
    TransactionType.COLLATERAL_SETTLEMENT: -1,
    TransactionType.COLLATERAL_FORFEIT: 0,
    TransactionType.GUARANTOR_GAIN_OUT: -1,
    TransactionType.ACCRUAL: 1,
}


class ContractState(str, Enum):
    """Life cycle of a loan contract"""
    ACTIVE = "active"
    PAID = "paid"
    DEFAULTED = "defaulted"


class OfferChoice(str, Enum):
    """Offer retained by the platform for a request"""
    PLAIN = "plain"
    GUARANTEED = "guaranteed"
    NONE = "none"


class InvestorAction(str, Enum):
    """Decision of an investor for the current period"""
    INVEST = "invest"
    HOLD = "hold"
    WITHDRAW = "withdraw"


class InvestorStatus(str, Enum):
    """Life cycle of an investor in the pool"""
    PROSPECT = "prospect"
    INVESTED = "invested"
    WITHDRAWING = "withdrawing"
    DEPARTED = "departed"


class BorrowerMode(str, Enum):
    """Borrower population process"""
    CONSTANT = "constant"
    RECURRING = "recurring"
    ARRIVALS = "arrivals"


class Objective(str, Enum):
    """Spread sweep objective functional"""
    MEAN = "mean"
    TERMINAL = "terminal"
    CUMULATIVE = "cumulative"


__all__ = [
    "InvalidInputError",
    "ScenarioError",
    "TransactionType",
    "ContractState",
    "OfferChoice",
    "InvestorAction",
    "InvestorStatus",
    "BorrowerMode",
    "Objective"
]
