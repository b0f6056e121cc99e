# -*- coding: utf-8 -*-

"""
RECEIVABLES POOL libs
____________________________________________________________________________________________________
Metrics lib
version : 1.0
____________________________________________________________________________________________________
Return computation, allocation diagnostics and ensemble aggregation
____________________________________________________________________________________________________
(c) Lafiteau Franck
"""

# import external modules
from __future__ import annotations
from dataclasses import dataclass
from typing import Sequence
import numpy as np

# import config
from . import config

# import header
from .header import InvalidInputError


# ----- Rate conversion ----- #
def per_period_rate(annual: float, periods_per_year: int=config.DEFAULT_PERIODS_PER_YEAR) -> float:
    """
    Compound root of an annualized rate: (1+a)^(1/ppy) - 1
    """
    if periods_per_year < 1:
        raise InvalidInputError(f"periods_per_year must be >= 1, got {periods_per_year}")
    if annual <= -1:
        raise InvalidInputError(f"Annual rate must be > -1, got {annual}")
    return (1.0 + annual) ** (1.0 / periods_per_year) - 1.0


def annualize(x: float, periods_per_year: int=config.DEFAULT_PERIODS_PER_YEAR) -> float:
    """
    (1+x)^ppy - 1
    """
    return (1.0 + x) ** periods_per_year - 1.0


# ----- Returns ----- #
def one_period_return(quota: Sequence[float]) -> np.ndarray:
    """
    Element t-1 of the result is quota[t]/quota[t-1] - 1, for t >= 1
    """
    values = np.asarray(quota, dtype=float)
    if values.size < 2:
        raise InvalidInputError(f"Need at least 2 quota values, got {values.size}")
    if np.any(~(values > 0)):
        raise InvalidInputError("Quota values must be positive")
    return values[1:] / values[:-1] - 1.0


def asset_return(total_assets: Sequence[float]) -> np.ndarray:
    """
    One period return of raw assets, only meaningful without investor flux
    """
    return one_period_return(total_assets)


def trailing_annualized_return(quota: Sequence[float],
                               window: int=config.DEFAULT_METRIC_WINDOW,
                               periods_per_year: int=config.DEFAULT_PERIODS_PER_YEAR) -> np.ndarray:
    """
    Element t = (quota[t]/quota[t-window])^(ppy/window) - 1 for t >= window, NaN before
    """
    if window < 1:
        raise InvalidInputError(f"Window must be >= 1, got {window}")
    values = np.asarray(quota, dtype=float)
    out = np.full(values.size, np.nan)
    if values.size <= window:
        return out
    head, tail = values[:-window], values[window:]
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = tail / head
        defined = (head > 0) & (tail > 0)
        out[window:] = np.where(defined, ratio ** (periods_per_year / window) - 1.0, np.nan)
    return out


def allocation_ratio(loan_book_value: Sequence[float], total_assets: Sequence[float]) -> np.ndarray:
    """
    Share of the assets lent out, clipped to [0, 1]
    """
    book = np.asarray(loan_book_value, dtype=float)
    total = np.asarray(total_assets, dtype=float)
    if book.shape != total.shape:
        raise InvalidInputError(f"Series lengths differ: {book.shape} vs {total.shape}")
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(total > 0, book / total, 0.0)
    return np.clip(ratio, 0.0, 1.0)


# ----- Ensemble statistics ----- #
@dataclass(frozen=True)
class SeriesStats:
    """
    Per-period boxplot statistics across an ensemble
    """
    mean: np.ndarray
    minimum: np.ndarray
    q1: np.ndarray
    median: np.ndarray
    q3: np.ndarray
    maximum: np.ndarray

    @property
    def iqr(self) -> np.ndarray:
        return self.q3 - self.q1

    def __len__(self) -> int:
        return len(self.mean)

    def to_dict(self) -> dict[str, list[float]]:
        return {
            "mean": self.mean.tolist(),
            "min": self.minimum.tolist(),
            "q1": self.q1.tolist(),
            "median": self.median.tolist(),
            "q3": self.q3.tolist(),
            "max": self.maximum.tolist()
        }


def quartiles(values: Sequence[float]) -> tuple[float, float, float]:
    """
    (q1, median, q3) with the median-of-halves convention, the median is
    excluded from both halves when the count is odd
    """
    data = np.sort(np.asarray(values, dtype=float))
    n = data.size
    if n == 0:
        return np.nan, np.nan, np.nan
    if n == 1:
        return data[0], data[0], data[0]
    half = n // 2
    return float(np.median(data[:half])), float(np.median(data)), float(np.median(data[n - half:]))


def ensemble_stats(ensemble: Sequence[Sequence[float]]) -> SeriesStats:
    """
    Mean and order statistics per period, NaN entries ignored
    """
    if len(ensemble) == 0:
        raise InvalidInputError("Ensemble must not be empty")
    lengths = {len(series) for series in ensemble}
    if len(lengths) != 1:
        raise InvalidInputError(f"Ensemble series lengths differ: {sorted(lengths)}")
    matrix = np.asarray(ensemble, dtype=float)
    n_periods = matrix.shape[1]

    stats = {name: np.full(n_periods, np.nan) for name in ("mean", "min", "q1", "median", "q3", "max")}
    for t in range(n_periods):
        column = matrix[:, t]
        column = column[np.isfinite(column)]
        if column.size == 0:
            continue
        stats["mean"][t] = column.mean()
        stats["min"][t] = column.min()
        stats["max"][t] = column.max()
        stats["q1"][t], stats["median"][t], stats["q3"][t] = quartiles(column)

    return SeriesStats(stats["mean"], stats["min"], stats["q1"], stats["median"], stats["q3"], stats["max"])


def mean_and_standard_error(samples: Sequence[float]) -> tuple[float, float]:
    """
    Sample mean and its standard error, NaN entries ignored
    """
    data = np.asarray(samples, dtype=float)
    data = data[np.isfinite(data)]
    if data.size == 0:
        return np.nan, np.nan
    if data.size == 1:
        return float(data[0]), 0.0
    return float(data.mean()), float(data.std(ddof=1) / np.sqrt(data.size))


__all__ = [
    "per_period_rate",
    "annualize",
    "one_period_return",
    "asset_return",
    "trailing_annualized_return",
    "allocation_ratio",
    "SeriesStats",
    "quartiles",
    "ensemble_stats",
    "mean_and_standard_error"
]
