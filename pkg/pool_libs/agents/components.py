# -*- coding: utf-8 -*-

"""
RECEIVABLES POOL libs
____________________________________________________________________________________________________
Agents libs Components
version : 1.0
____________________________________________________________________________________________________
Contains data components of borrowers, guarantors and investors
____________________________________________________________________________________________________
(c) Lafiteau Franck
"""

# importing external modules
from __future__ import annotations
from dataclasses import dataclass
from typing import Optional, TYPE_CHECKING

# import header
from ..header import InvalidInputError, InvestorStatus

# import pricing and credit model structures
from ..pricing import ReceivableSchedule
from ..credit_model import RatingModel

if TYPE_CHECKING:
    from ..ledger.contract import LoanContract


# ----- Base class ----- #
class AgentComponent:
    """
    Base Instance for all agent components
    """
    @classmethod
    def from_dict(cls, data: dict) -> AgentComponent:
        """
        Create a new component from a dict
        """
        return cls(**data)


# ----- Guarantor ----- #
@dataclass
class GuarantorSpec(AgentComponent):
    """
    A guarantor staking V_c on a single loan.
    s_g is per-period, rating produces p_g from the borrower's p_true.
    """
    id: int
    V_c: float
    s_g: float
    rating: RatingModel

    def __post_init__(self) -> None:
        if not self.V_c > 0:
            raise InvalidInputError(f"Collateral must be positive, got {self.V_c}")
        if self.s_g < 0:
            raise InvalidInputError(f"Guarantor spread must be >= 0, got {self.s_g}")


# ----- Borrower ----- #
@dataclass
class BorrowerSpec(AgentComponent):
    """
    A borrower trading equal installments summing to schedule_total.
    A borrower with an active loan does not request a new anticipation,
    a recurring borrower asks again the period after its loan closed.
    """
    id: int
    p_true: float
    schedule_total: float
    n_installments: int
    has_guarantor: bool = False
    guarantor: Optional[GuarantorSpec] = None
    active_loan: Optional[LoanContract] = None
    entry_period: int = 0
    closed_period: Optional[int] = None

    def __post_init__(self) -> None:
        if not 0.0 <= self.p_true <= 1.0:
            raise InvalidInputError(f"p_true must lie in [0, 1], got {self.p_true}")
        if self.n_installments < 1:
            raise InvalidInputError(f"Number of installments must be >= 1, got {self.n_installments}")
        if not self.schedule_total > 0:
            raise InvalidInputError(f"Schedule total must be positive, got {self.schedule_total}")

    @property
    def schedule(self) -> ReceivableSchedule:
        return ReceivableSchedule.equal(self.schedule_total, self.n_installments)

    @property
    def busy(self) -> bool:
        """
        Whether the borrower still repays a loan
        """
        return self.active_loan is not None and self.active_loan.active

    def can_request(self, period: int) -> bool:
        """
        Idle and not in the period its last loan closed
        """
        if self.busy:
            return False
        return self.closed_period is None or period > self.closed_period


# ----- Investor ----- #
@dataclass(frozen=True)
class InvestorSpec(AgentComponent):
    """
    Investor parameters. expected_return is annualized, withdrawal rates are per period.
    """
    id: int
    amount: float
    expected_return: float = 0.0
    eval_window: int = 18
    profit_withdraw_rate: float = 0.0
    loss_withdraw_rate: float = 0.0
    min_holding: int = 0
    is_seed: bool = False
    permanent: bool = False
    enter_blind: bool = True

    def __post_init__(self) -> None:
        if not self.amount > 0:
            raise InvalidInputError(f"Investment amount must be positive, got {self.amount}")
        if self.eval_window < 1:
            raise InvalidInputError(f"Evaluation window must be >= 1, got {self.eval_window}")
        if self.min_holding < 0:
            raise InvalidInputError(f"Minimum holding must be >= 0, got {self.min_holding}")
        for rate in (self.profit_withdraw_rate, self.loss_withdraw_rate):
            if not 0.0 <= rate <= 1.0:
                raise InvalidInputError(f"Withdrawal rates must lie in [0, 1], got {rate}")


@dataclass
class InvestorState(AgentComponent):
    """
    Mutable position of an investor inside a run
    """
    spec: InvestorSpec
    arrival_period: int
    status: InvestorStatus = InvestorStatus.PROSPECT
    entry_period: Optional[int] = None

    @property
    def id(self) -> int:
        return self.spec.id

    @property
    def invested(self) -> bool:
        """
        Whether the investor still holds quotas
        """
        return self.status in (InvestorStatus.INVESTED, InvestorStatus.WITHDRAWING)

    def holding_age(self, period: int) -> Optional[int]:
        if self.entry_period is None:
            return None
        return period - self.entry_period


__all__ = [
    "AgentComponent",
    "GuarantorSpec",
    "BorrowerSpec",
    "InvestorSpec",
    "InvestorState"
]
