# -*- coding: utf-8 -*-

"""
RECEIVABLES POOL libs
____________________________________________________________________________________________________
Credit model lib
version : 1.0
____________________________________________________________________________________________________
True and estimated default probabilities, the geometric default process
and realized payment outcomes
____________________________________________________________________________________________________
(c) Lafiteau Franck
"""

# import external modules
from __future__ import annotations
from dataclasses import dataclass
from typing import Optional
from math import isfinite
import numpy as np

# import config
from . import config

# import header
from .header import InvalidInputError


# ----- DefaultPopulation ----- #
@dataclass(frozen=True)
class DefaultPopulation:
    """
    Beta distribution of true per-period default probabilities
    """
    beta_a: float
    beta_b: float

    def __post_init__(self) -> None:
        if not (self.beta_a > 0 and self.beta_b > 0):
            raise InvalidInputError(
                f"Beta shapes must be positive, got a={self.beta_a}, b={self.beta_b}"
            )

    @property
    def mean(self) -> float:
        return self.beta_a / (self.beta_a + self.beta_b)


# ----- RatingModel ----- #
@dataclass(frozen=True)
class RatingModel:
    """
    Linear rating engine p = a p_T + b + eps, eps ~ N(0, sigma_sd),
    clamped to [0, p_max]
    """
    a: float = 1.0
    b: float = 0.0
    sigma_sd: float = 0.0
    p_max: float = config.DEFAULT_P_MAX

    def __post_init__(self) -> None:
        if not all(isfinite(x) for x in (self.a, self.b, self.sigma_sd, self.p_max)):
            raise InvalidInputError("Rating model parameters must be finite")
        if self.sigma_sd < 0:
            raise InvalidInputError(f"Rating noise must be >= 0, got {self.sigma_sd}")
        if not 0.0 < self.p_max <= 1.0:
            raise InvalidInputError(f"p_max must lie in (0, 1], got {self.p_max}")

    @classmethod
    def identity(cls) -> RatingModel:
        """
        Perfect rating engine
        """
        return cls(1.0, 0.0, 0.0)


# ----- PaymentOutcome ----- #
@dataclass(frozen=True)
class PaymentOutcome:
    """
    Realized payment path of a loan. default_period is None when fully paid,
    otherwise installments with period index >= default_period are never paid.
    """
    default_period: Optional[int] = None

    @property
    def fully_paid(self) -> bool:
        return self.default_period is None

    def honors(self, period_index: int) -> bool:
        """
        Whether the installment due at period_index is paid
        """
        return self.default_period is None or period_index < self.default_period


# ----- Geometric default process ----- #
def survival_prob(p: float, i: int) -> float:
    """
    Probability of not having defaulted by period i: (1-p)^i
    """
    if i < 1:
        raise InvalidInputError(f"Period index must be >= 1, got {i}")
    if not 0.0 <= p <= 1.0:
        raise InvalidInputError(f"p must lie in [0, 1], got {p}")
    return (1.0 - p) ** i


def default_pmf(p: float, i: int) -> float:
    """
    Probability of defaulting exactly at period i: (1-p)^(i-1) p
    """
    if i < 1:
        raise InvalidInputError(f"Period index must be >= 1, got {i}")
    if not 0.0 <= p <= 1.0:
        raise InvalidInputError(f"p must lie in [0, 1], got {p}")
    return (1.0 - p) ** (i - 1) * p


def sample_true_default_prob(pop: DefaultPopulation, rng: np.random.Generator) -> float:
    """
    Draw a borrower's true default probability from Beta(beta_a, beta_b)
    """
    return float(rng.beta(pop.beta_a, pop.beta_b))


def estimate_default_prob(model: RatingModel, p_true: float, rng: np.random.Generator) -> float:
    """
    Rating engine estimate of p_true. Always consumes one normal draw
    so that random streams stay aligned across rating models.
    """
    if not 0.0 <= p_true <= 1.0:
        raise InvalidInputError(f"p_true must lie in [0, 1], got {p_true}")
    noise = float(rng.normal(0.0, model.sigma_sd))
    return min(max(model.a * p_true + model.b + noise, 0.0), model.p_max)


def sample_payment_outcome(p_true: float, N: int, rng: np.random.Generator) -> PaymentOutcome:
    """
    Sample the default period over N periods by inverting the survival function
    with a single uniform draw
    """
    if N < 1:
        raise InvalidInputError(f"N must be >= 1, got {N}")
    if not 0.0 <= p_true <= 1.0:
        raise InvalidInputError(f"p_true must lie in [0, 1], got {p_true}")
    v = 1.0 - float(rng.random()) # in (0, 1]
    survival = 1.0
    for i in range(1, N + 1):
        survival *= 1.0 - p_true
        if v > survival:
            return PaymentOutcome(i)
    return PaymentOutcome(None)


__all__ = [
    "DefaultPopulation",
    "RatingModel",
    "PaymentOutcome",
    "survival_prob",
    "default_pmf",
    "sample_true_default_prob",
    "estimate_default_prob",
    "sample_payment_outcome"
]
