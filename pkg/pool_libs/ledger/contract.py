# -*- coding: utf-8 -*-

"""
RECEIVABLES POOL libs
____________________________________________________________________________________________________
Ledger libs Contract
version : 1.0
____________________________________________________________________________________________________
Contains the loan contract of an originated anticipation
____________________________________________________________________________________________________
(c) Lafiteau Franck
"""

# import external modules
from __future__ import annotations
from dataclasses import dataclass, field
from typing import Optional

# import header
from ..header import ContractState, InvalidInputError

# import pricing and credit model structures
from ..pricing import ReceivableSchedule, RateSet, GuarantorTerms
from ..credit_model import PaymentOutcome


# ----- LoanContract ----- #
@dataclass
class LoanContract:
    """
    An originated anticipation.

    The outcome is the payment path sampled at request time, it stays hidden
    from pricing and valuation which only use p_est.
    next_due_index is the 1-based ordinal of the next installment (N+1 when done).
    """
    borrower_id: int
    schedule: ReceivableSchedule
    anticipation_paid: float
    p_est: float
    rates: RateSet
    origination_period: int
    outcome: PaymentOutcome = field(default_factory=PaymentOutcome)
    guarantor_terms: Optional[GuarantorTerms] = None
    state: ContractState = ContractState.ACTIVE
    next_due_index: int = 1
    contract_id: int = -1

    @property
    def guaranteed(self) -> bool:
        return self.guarantor_terms is not None

    @property
    def active(self) -> bool:
        return self.state is ContractState.ACTIVE

    @property
    def next_due_period(self) -> Optional[int]:
        """
        Absolute simulation period of the next installment, None when done
        """
        if self.next_due_index > self.schedule.N:
            return None
        period_index, _ = self.schedule.installments[self.next_due_index - 1]
        return self.origination_period + period_index

    def elapsed(self, period: int) -> int:
        return period - self.origination_period

    def advance(self) -> None:
        """
        Mark the next installment as paid
        """
        if not self.active:
            raise InvalidInputError(f"Contract {self.contract_id} is {self.state.value}")
        self.next_due_index += 1
        if self.next_due_index > self.schedule.N:
            self.state = ContractState.PAID

    def mark_defaulted(self) -> None:
        if not self.active:
            raise InvalidInputError(f"Contract {self.contract_id} is {self.state.value}")
        self.state = ContractState.DEFAULTED

    def collateral_value(self, period: int) -> float:
        """
        Accrued collateral V_c (1+r)^elapsed held for the guarantor
        """
        if self.guarantor_terms is None or not self.active:
            return 0.0
        return self.guarantor_terms.V_c * (1.0 + self.rates.r) ** self.elapsed(period)

    def book_value(self, period: int) -> float:
        """
        Survival-weighted remaining installments discounted at the contract's own (1+r+s),
        conditioned on no default so far. Guaranteed contracts also carry the expected
        collateral retention and the G_s owed on survival, so that the value at
        origination equals the price paid.
        """
        if not self.active:
            return 0.0
        elapsed = self.elapsed(period)
        q = 1.0 - self.p_est
        base = self.rates.discount_base
        terms = self.guarantor_terms
        last = self.schedule.last_period
        value = 0.0
        for period_index, amount in self.schedule.installments[self.next_due_index - 1:]:
            m = period_index - elapsed
            if terms is not None:
                if period_index == last:
                    amount -= terms.G_s
                collateral = terms.V_c * (1.0 + self.rates.r) ** period_index
                value += (q ** m * amount + q ** (m - 1) * self.p_est * collateral) / base ** m
            else:
                value += q ** m * amount / base ** m
        return value
