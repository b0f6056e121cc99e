# -*- coding: utf-8 -*-

"""
RECEIVABLES POOL libs
____________________________________________________________________________________________________
Demand lib
version : 1.0
____________________________________________________________________________________________________
Borrower price sensitivity: probability of accepting an anticipation offer
____________________________________________________________________________________________________
(c) Lafiteau Franck
"""

# import external modules
from __future__ import annotations
from dataclasses import dataclass
from math import exp, isfinite
import numpy as np

# import header
from .header import InvalidInputError

# import pricing
from .pricing import ReceivableSchedule, RateSet, anticipation


_TINY: float = float(np.finfo(float).tiny)
_BELOW_ONE: float = float(np.nextafter(1.0, 0.0))


# ----- DemandCurve ----- #
@dataclass(frozen=True)
class DemandCurve:
    """
    Logistic acceptance curve f(A) = 1 / (1 + exp(phi (A - A_0) / A_0)).
    phi must be negative so that better offers are accepted more often.
    s0 is the per-period reference spread used to price A_0.
    """
    phi: float
    s0: float

    def __post_init__(self) -> None:
        if not isfinite(self.phi) or self.phi >= 0:
            raise InvalidInputError(f"phi must be negative, got {self.phi}")
        if not isfinite(self.s0) or self.s0 < 0:
            raise InvalidInputError(f"s0 must be >= 0, got {self.s0}")


def reference_anticipation(schedule: ReceivableSchedule,
                           p: float,
                           r: float,
                           curve: DemandCurve) -> float:
    """
    Plain offer at the reference spread s0, computed with the platform estimate p
    """
    return anticipation(schedule, p, RateSet(r, curve.s0))


def acceptance_probability(curve: DemandCurve, A: float, A_0: float) -> float:
    """
    Probability a borrower accepts an offer of value A
    """
    if not A_0 > 0:
        raise InvalidInputError(f"Reference anticipation must be positive, got {A_0}")
    x = curve.phi * (A - A_0) / A_0
    # stable logistic, 1 / (1 + e^x)
    if x >= 0:
        e = exp(-x)
        f = e / (1.0 + e)
    else:
        f = 1.0 / (1.0 + exp(x))
    # kept strictly inside (0, 1) when the exponential saturates
    return min(max(f, _TINY), _BELOW_ONE)


__all__ = [
    "DemandCurve",
    "reference_anticipation",
    "acceptance_probability"
]
