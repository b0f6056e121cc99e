# -*- coding: utf-8 -*-

"""
RECEIVABLES POOL libs
____________________________________________________________________________________________________
Ledger libs Pool
version : 1.0
____________________________________________________________________________________________________
Liquidity pool cash management, loan book valuation, collateral custody
and quota accounting
____________________________________________________________________________________________________
(c) Lafiteau Franck
"""

# import external modules
from __future__ import annotations
from dataclasses import dataclass, field
from typing import Optional
import pandas as pd

# import config
from .. import config

# import logger
from .. import logger

# import header
from ..header import TransactionType as T, InvalidInputError

# import contract
from .contract import LoanContract


# ----- Records ----- #
@dataclass(frozen=True)
class Transaction:
    """
    One liquidity pool log record
    """
    period: int
    type: T
    amount: float

    @property
    def cash_effect(self) -> float:
        return self.type.cash_sign * self.amount


@dataclass
class PendingSettlement:
    """
    Guarantor repayment waiting for enough cash
    """
    contract_id: int
    collateral: float
    gain: float
    since_period: int

    @property
    def total(self) -> float:
        return self.collateral + self.gain


@dataclass
class PeriodSummary:
    """
    Cash flows of one collection pass
    """
    period: int
    installments: float = 0.0
    installment_count: int = 0
    defaults: int = 0
    paid_off: int = 0
    settlements_paid: float = 0.0
    settlements_deferred: int = 0
    closed: list[LoanContract] = field(default_factory=list)


# ----- PoolLedger ----- #
class PoolLedger:
    """
    Liquidity pool of the platform.

    Collateral enters pool cash at origination and stays reserved as a liability
    accruing at r. Originations and withdrawals only draw on free cash.
    total_assets = cash + loan_book_value - liabilities
    """
    def __init__(self, initial_quota_value: float=config.INITIAL_QUOTA_VALUE) -> None:
        self.cash: float = 0.0
        self.contracts: list[LoanContract] = []
        self.collateral_held: float = 0.0
        self.quota_supply: float = 0.0
        self.holdings: dict[int, float] = {}
        self.transactions: list[Transaction] = []
        self.pending: list[PendingSettlement] = []
        self.period: int = 0
        self.initial_quota_value: float = initial_quota_value
        self._contract_counter: int = 0

    # Log methods
    def _log(self, ttype: T, amount: float) -> None:
        self.transactions.append(Transaction(self.period, ttype, amount))

    def replayed_cash(self) -> float:
        """
        Cash rebuilt from the transaction log
        """
        return sum(t.cash_effect for t in self.transactions)

    def transactions_frame(self) -> pd.DataFrame:
        """
        Transaction log as a (period, type, amount) table
        """
        return pd.DataFrame(
            [(t.period, t.type.value, t.amount) for t in self.transactions],
            columns=["period", "type", "amount"]
        )

    # Valuation methods
    def loan_book_value(self, period: Optional[int]=None) -> float:
        period = self.period if period is None else period
        return sum(c.book_value(period) for c in self.contracts)

    def liabilities(self, period: Optional[int]=None) -> float:
        """
        Accrued collateral of active guaranteed contracts plus pending settlements
        """
        if self.collateral_held <= 0 and not self.pending:
            return 0.0
        period = self.period if period is None else period
        held = sum(c.collateral_value(period) for c in self.contracts if c.guaranteed)
        return held + sum(p.total for p in self.pending)

    def free_cash(self) -> float:
        return max(self.cash - self.liabilities(), 0.0)

    def valuation(self, period: Optional[int]=None) -> tuple[float, float]:
        """
        Return (total_assets, quota_value)
        """
        period = self.period if period is None else period
        total = self.cash + self.loan_book_value(period) - self.liabilities(period)
        if self.quota_supply <= 0:
            return total, self.initial_quota_value
        return total, total / self.quota_supply

    def quota_value(self) -> float:
        return self.valuation()[1]

    # Investor methods
    def deposit(self, investor_id: int, amount: float) -> float:
        """
        Issue quotas at the current quota value and return their count
        """
        if not amount > 0:
            raise InvalidInputError(f"Deposit amount must be positive, got {amount}")
        quotas = amount / self.quota_value()
        self.cash += amount
        self.holdings[investor_id] = self.holdings.get(investor_id, 0.0) + quotas
        self.quota_supply += quotas
        self._log(T.DEPOSIT, amount)
        return quotas

    def withdraw(self, investor_id: int) -> float:
        """
        Redeem the investor's full balance up to the free cash and return the amount paid.
        The unfilled remainder stays invested.
        """
        holding = self.holdings.get(investor_id)
        if holding is None:
            raise InvalidInputError(f"Unknown investor {investor_id}")
        quota_value = self.quota_value()
        requested = holding * quota_value
        paid = min(requested, self.free_cash())
        if paid <= 0:
            return 0.0
        if paid >= requested:
            burned = holding
            del self.holdings[investor_id]
        else:
            burned = paid / quota_value
            self.holdings[investor_id] = holding - burned
        self.quota_supply -= burned
        if not self.holdings:
            self.quota_supply = 0.0
        self.cash -= paid
        self._log(T.WITHDRAWAL, paid)
        return paid

    # Loan methods
    def originate(self, contract: LoanContract) -> bool:
        """
        Fund a priced contract when free cash allows it, loans are never fractionally funded
        """
        if self.free_cash() < contract.anticipation_paid:
            logger.debug(f"[PoolLedger] Contract for borrower {contract.borrower_id} unfunded "
                         f"({contract.anticipation_paid:.4f} > {self.free_cash():.4f})")
            return False
        contract.contract_id = self._contract_counter
        contract.origination_period = self.period
        self._contract_counter += 1
        self.cash -= contract.anticipation_paid
        self._log(T.ANTICIPATION, contract.anticipation_paid)
        if contract.guarantor_terms is not None:
            self.cash += contract.guarantor_terms.V_c
            self.collateral_held += contract.guarantor_terms.V_c
            self._log(T.COLLATERAL_IN, contract.guarantor_terms.V_c)
        self.contracts.append(contract)
        return True

    def accrue(self, period: int, r: float) -> float:
        """
        Open a new period: idle cash earns the base rate
        """
        self.period = period
        interest = self.cash * r
        if interest > 0:
            self.cash += interest
            self._log(T.ACCRUAL, interest)
        return interest

    def process_period(self, period: int) -> PeriodSummary:
        """
        Collect due installments, realize defaults and settle guarantors
        """
        self.period = period
        summary = PeriodSummary(period)
        still_active: list[LoanContract] = []
        for contract in self.contracts:
            if contract.next_due_period == period:
                self._collect(contract, summary)
            if contract.active:
                still_active.append(contract)
            else:
                summary.closed.append(contract)
        self.contracts = still_active
        self._settle_pending(summary)
        return summary

    def _collect(self, contract: LoanContract, summary: PeriodSummary) -> None:
        period_index, amount = contract.schedule.installments[contract.next_due_index - 1]
        terms = contract.guarantor_terms

        if not contract.outcome.honors(period_index):
            contract.mark_defaulted()
            summary.defaults += 1
            if terms is not None:
                # collateral already sits in cash, only the liability goes away
                self.collateral_held -= terms.V_c
                self._log(T.COLLATERAL_FORFEIT, terms.V_c * (1.0 + contract.rates.r) ** period_index)
            return

        self.cash += amount
        self._log(T.INSTALLMENT, amount)
        summary.installments += amount
        summary.installment_count += 1
        contract.advance()
        if contract.active:
            return

        summary.paid_off += 1
        if terms is not None:
            self.collateral_held -= terms.V_c
            last = contract.schedule.last_period
            self.pending.append(PendingSettlement(
                contract.contract_id,
                terms.V_c * (1.0 + contract.rates.r) ** last,
                terms.G_s,
                self.period
            ))

    def _settle_pending(self, summary: PeriodSummary) -> None:
        remaining: list[PendingSettlement] = []
        for item in self.pending:
            reserved_elsewhere = self.liabilities() - item.total
            available = self.cash - reserved_elsewhere
            if available >= item.total * (1.0 - config.RELATIVE_TOLERANCE):
                # accrual rounding may leave cash a hair below the accrued collateral
                self.cash = max(self.cash - item.total, 0.0)
                self._log(T.COLLATERAL_SETTLEMENT, item.collateral)
                if item.gain > 0:
                    self._log(T.GUARANTOR_GAIN_OUT, item.gain)
                summary.settlements_paid += item.total
                # drop it from the liabilities seen by the next items
                self.pending = [p for p in self.pending if p is not item]
            else:
                summary.settlements_deferred += 1
                remaining.append(item)
                logger.debug(f"[PoolLedger] Settlement of contract {item.contract_id} deferred "
                             f"at period {self.period} ({item.total:.4f} owed)")
        self.pending = remaining
