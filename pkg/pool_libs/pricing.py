# -*- coding: utf-8 -*-

"""
RECEIVABLES POOL libs
____________________________________________________________________________________________________
Pricing lib
version : 1.0
____________________________________________________________________________________________________
Closed-form anticipation pricing with and without guarantors,
offer selection rule and the Monte Carlo payment oracle
____________________________________________________________________________________________________
(c) Lafiteau Franck
"""

# import external modules
from __future__ import annotations
from dataclasses import dataclass, field
from typing import Optional
from math import isfinite
import numpy as np

# import config
from . import config

# import header
from .header import InvalidInputError, OfferChoice


# ----- ReceivableSchedule ----- #
@dataclass(frozen=True)
class ReceivableSchedule:
    """
    Installments a borrower offers for anticipation.
    Each installment is a (period_index, amount) pair.
    """
    installments: tuple[tuple[int, float], ...]

    def __post_init__(self) -> None:
        if not self.installments:
            raise InvalidInputError("A receivable schedule needs at least one installment")
        previous = 0
        for period, amount in self.installments:
            if period <= previous:
                raise InvalidInputError(
                    f"Installment periods must be strictly increasing from 1, got {period} after {previous}"
                )
            if not amount > 0 or not isfinite(amount):
                raise InvalidInputError(f"Installment amount must be positive, got {amount}")
            previous = period

    @classmethod
    def equal(cls, total: float, n_installments: int) -> ReceivableSchedule:
        """
        Create a schedule of n equal installments at periods 1..n summing to total
        """
        if n_installments < 1:
            raise InvalidInputError(f"Number of installments must be >= 1, got {n_installments}")
        amount = total / n_installments
        return cls(tuple((i, amount) for i in range(1, n_installments + 1)))

    @property
    def N(self) -> int:
        """
        Number of installments
        """
        return len(self.installments)

    @property
    def last_period(self) -> int:
        """
        Period index of the last installment
        """
        return self.installments[-1][0]

    @property
    def periods(self) -> np.ndarray:
        return np.array([period for period, _ in self.installments], dtype=float)

    @property
    def amounts(self) -> np.ndarray:
        return np.array([amount for _, amount in self.installments], dtype=float)

    def total(self) -> float:
        """
        Sum of all installments
        """
        return float(sum(amount for _, amount in self.installments))


# ----- RateSet ----- #
@dataclass(frozen=True)
class RateSet:
    """
    Per-period base rate r and platform spread s
    """
    r: float
    s: float = 0.0

    def __post_init__(self) -> None:
        if not (isfinite(self.r) and isfinite(self.s)):
            raise InvalidInputError(f"Rates must be finite, got r={self.r}, s={self.s}")
        if self.r < 0 or self.s < 0:
            raise InvalidInputError(f"Rates must be non-negative, got r={self.r}, s={self.s}")

    @property
    def discount_base(self) -> float:
        """
        Per-period discount base 1 + r + s
        """
        return 1.0 + self.r + self.s


# ----- GuarantorTerms ----- #
@dataclass(frozen=True)
class GuarantorTerms:
    """
    Guarantor stake, its own default estimate, its extra spread and the asked gain G_s
    """
    V_c: float
    p_g: float
    s_g: float
    G_s: float = field(default=0.0)

    def __post_init__(self) -> None:
        if self.V_c < 0:
            raise InvalidInputError(f"Collateral must be non-negative, got {self.V_c}")
        if not 0.0 <= self.p_g < 1.0:
            raise InvalidInputError(f"Guarantor default estimate must lie in [0, 1), got {self.p_g}")
        if self.s_g < 0:
            raise InvalidInputError(f"Guarantor spread must be non-negative, got {self.s_g}")

    @classmethod
    def quote(cls, V_c: float, p_g: float, s_g: float, r: float, N: int) -> GuarantorTerms:
        """
        Build terms with G_s computed from the guarantor indifference condition
        """
        return cls(V_c, p_g, s_g, guarantor_gain(V_c, p_g, s_g, r, N))

    def settlement(self, r: float, last_period: int) -> float:
        """
        Amount owed to the guarantor when the loan is fully honored
        """
        return self.V_c * (1.0 + r) ** last_period + self.G_s


def _check_probability(p: float, name: str="p") -> None:
    if not 0.0 <= p <= 1.0 or not isfinite(p):
        raise InvalidInputError(f"{name} must lie in [0, 1], got {p}")


# ----- Anticipation formulas ----- #
def anticipation(schedule: ReceivableSchedule, p: float, rates: RateSet) -> float:
    """
    Anticipation offer without guarantor:
    A = sum_i (1-p)^i R_i / (1+r+s)^i over installment period indices i
    """
    _check_probability(p)
    ratio = (1.0 - p) / rates.discount_base
    return sum(ratio ** i * amount for i, amount in schedule.installments)


def guarantor_gain(V_c: float, p_g: float, s_g: float, r: float, N: int) -> float:
    """
    Extra gain G_s asked by a guarantor staking V_c over N periods.
    Solves (1-p_g)^N (V_c(1+r)^N + G_s) = V_c(1+r+s_g)^N
    """
    if N < 1:
        raise InvalidInputError(f"N must be >= 1, got {N}")
    if not 0.0 <= p_g < 1.0:
        raise InvalidInputError(f"Guarantor default estimate must lie in [0, 1), got {p_g}")
    return V_c * (1.0 + r + s_g) ** N / (1.0 - p_g) ** N - V_c * (1.0 + r) ** N


def anticipation_with_guarantor(schedule: ReceivableSchedule,
                                p: float,
                                rates: RateSet,
                                terms: GuarantorTerms) -> float:
    """
    Anticipation offer when a guarantor stakes collateral:
    A_g = sum_i [(1-p)^i (R_i - d_iN G_s) + (1-p)^(i-1) p V_c (1+r)^i] / (1+r+s)^i
    G_s only applies to the last installment.
    """
    _check_probability(p)
    last = schedule.last_period
    value = 0.0
    for i, amount in schedule.installments:
        if i == last:
            amount -= terms.G_s
        survival = (1.0 - p) ** i
        default_at = (1.0 - p) ** (i - 1) * p
        collateral = terms.V_c * (1.0 + rates.r) ** i
        value += (survival * amount + default_at * collateral) / rates.discount_base ** i
    return value


def select_offer(A_plain: float,
                 A_guaranteed: Optional[float],
                 improvement_threshold: float=config.DEFAULT_IMPROVEMENT_THRESHOLD,
                 p: Optional[float]=None,
                 p_refuse: Optional[float]=None,
                 force_guarantor: bool=False) -> OfferChoice:
    """
    Choose between the plain and the guaranteed offer.
    The guaranteed offer wins iff A_g >= (1 + threshold) A (inclusive boundary).
    The platform refuses when p is above p_refuse or the chosen value is not positive.
    """
    if improvement_threshold < 0:
        raise InvalidInputError(f"Improvement threshold must be >= 0, got {improvement_threshold}")
    if p is not None and p_refuse is not None and p > p_refuse:
        return OfferChoice.NONE

    choice = OfferChoice.PLAIN
    if A_guaranteed is not None:
        # inclusive boundary, up to the rounding of (1 + threshold) * A
        margin = A_guaranteed - (1.0 + improvement_threshold) * A_plain
        if force_guarantor or margin >= -config.RELATIVE_TOLERANCE * abs(A_plain):
            choice = OfferChoice.GUARANTEED

    value = A_guaranteed if choice is OfferChoice.GUARANTEED else A_plain
    if value <= 0:
        return OfferChoice.NONE
    return choice


# ----- Monte Carlo payment oracle ----- #
def sample_default_periods(p: float, trials: int, rng: np.random.Generator) -> np.ndarray:
    """
    Geometric default periods (float array, inf when p == 0)
    """
    _check_probability(p, "p_true")
    if p == 0.0:
        return np.full(trials, np.inf)
    return rng.geometric(p, size=trials).astype(float)


def payment_oracle(schedule: ReceivableSchedule,
                   p_true: float,
                   rng: np.random.Generator,
                   trials: int=config.ORACLE_TRIALS,
                   rates: Optional[RateSet]=None,
                   terms: Optional[GuarantorTerms]=None) -> tuple[np.ndarray, np.ndarray]:
    """
    Brute-force realized receipts for the platform and the guarantor.

    Each trial draws a default period from the geometric model at p_true,
    sums honored installments, adds the kept collateral V_c(1+r)^d on default
    and removes G_s at the last period on survival. Flows are discounted at
    (1+r+s) so that the mean converges to the closed-form offer when p_true
    equals the platform estimate.

    Returns (platform_receipts, guarantor_receipts), one value per trial.
    """
    rates = rates or RateSet(0.0, 0.0)
    default_periods = sample_default_periods(p_true, trials, rng)
    periods = schedule.periods
    discount = rates.discount_base ** periods

    honored = periods[None, :] < default_periods[:, None]
    platform = (honored * (schedule.amounts / discount)[None, :]).sum(axis=1)
    guarantor = np.zeros(trials)

    if terms is not None:
        last = schedule.last_period
        survived = default_periods > last
        defaulted = ~survived
        kept = np.zeros(trials)
        d = default_periods[defaulted]
        kept[defaulted] = terms.V_c * ((1.0 + rates.r) / rates.discount_base) ** d
        platform = platform + kept - survived * terms.G_s / rates.discount_base ** last
        guarantor = survived * terms.settlement(rates.r, last)

    return platform, guarantor


__all__ = [
    "ReceivableSchedule",
    "RateSet",
    "GuarantorTerms",
    "anticipation",
    "guarantor_gain",
    "anticipation_with_guarantor",
    "select_offer",
    "sample_default_periods",
    "payment_oracle"
]
