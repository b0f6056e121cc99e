# -*- coding: utf-8 -*-

"""
RECEIVABLES POOL libs
____________________________________________________________________________________________________
Optimizer lib
version : 1.0
____________________________________________________________________________________________________
Grid sweep over the platform spread maximizing the loan fund volume
____________________________________________________________________________________________________
(c) Lafiteau Franck
"""

# import external modules
from __future__ import annotations
from dataclasses import dataclass
from typing import Sequence
import numpy as np
import pandas as pd

# import config
from . import config

# import logger
from . import logger

# import header
from .header import InvalidInputError, Objective

# import engine and metrics
from .engine.scenario import ScenarioConfig
from .engine.result import RunResult
from .engine.engine import run_batch
from .metrics import SeriesStats, ensemble_stats, mean_and_standard_error


def objective_value(result: RunResult, objective: Objective=Objective.MEAN) -> float:
    """
    Loan fund volume functional of one run:
    mean book value over periods 1..horizon, terminal book value or cumulative originated volume
    """
    match objective:
        case Objective.MEAN:
            book = result.loan_book_value
            return float(book[1:].mean()) if book.size > 1 else float(book[0])
        case Objective.TERMINAL:
            return float(result.loan_book_value[-1])
        case Objective.CUMULATIVE:
            return float(result.column("originated_volume").sum())
    raise InvalidInputError(f"Unknown objective {objective}")


# ----- Sweep structures ----- #
@dataclass(frozen=True)
class SweepCandidate:
    """
    Objective samples of one spread, one value per run index
    """
    spread: float
    samples: np.ndarray

    @property
    def mean(self) -> float:
        return mean_and_standard_error(self.samples)[0]

    @property
    def standard_error(self) -> float:
        return mean_and_standard_error(self.samples)[1]

    @property
    def stats(self) -> SeriesStats:
        return ensemble_stats([[x] for x in self.samples])


@dataclass
class SweepResult:
    """
    Spread grid results, candidates in the order they were given
    """
    candidates: list[SweepCandidate]
    objective: Objective = Objective.MEAN
    n_runs: int = 1
    base_seed: int = 0

    @property
    def spreads(self) -> list[float]:
        return [c.spread for c in self.candidates]

    @property
    def means(self) -> np.ndarray:
        return np.array([c.mean for c in self.candidates])

    @property
    def relative_volumes(self) -> np.ndarray:
        """
        Candidate means over the smallest mean, the reference maps to 1 exactly
        """
        means = self.means
        reference = means.min()
        if not reference > 0:
            logger.warning(f"[Optimizer] Reference volume is {reference}, relative volumes undefined")
            return np.full(means.size, np.nan)
        relative = means / reference
        relative[means.argmin()] = 1.0
        return relative

    def to_frame(self) -> pd.DataFrame:
        """
        Long table (spread, run, objective), boxplot ready
        """
        rows = [
            (c.spread, run_index, float(value))
            for c in self.candidates
            for run_index, value in enumerate(c.samples)
        ]
        return pd.DataFrame(rows, columns=config.SWEEP_COLUMNS)


# ----- Sweep ----- #
def sweep_spread(scenario: ScenarioConfig,
                 spreads: Sequence[float],
                 n_runs: int,
                 base_seed: int,
                 objective: Objective=Objective.MEAN,
                 workers: int=1) -> SweepResult:
    """
    Run every spread candidate with the same derived seeds (common random numbers)
    """
    if len(spreads) == 0:
        raise InvalidInputError("Spread list must not be empty")
    if len(set(spreads)) != len(spreads):
        raise InvalidInputError(f"Spreads must be distinct, got {list(spreads)}")
    if n_runs < 1:
        raise InvalidInputError(f"n_runs must be >= 1, got {n_runs}")

    logger.info(f"[Optimizer] Sweep of {len(spreads)} spreads x {n_runs} runs ({objective.value} objective)")
    candidates: list[SweepCandidate] = []
    for spread in spreads:
        results = run_batch(scenario.with_spread(spread), n_runs, base_seed, workers)
        samples = np.array([objective_value(result, objective) for result in results])
        candidates.append(SweepCandidate(float(spread), samples))
        logger.debug(f"[Optimizer] Spread {spread}: mean objective {samples.mean():.6f}")
    return SweepResult(candidates, objective, n_runs, base_seed)


def select_best(result: SweepResult) -> float:
    """
    Lowest spread whose mean objective lies within one standard error of the best mean
    """
    if not result.candidates:
        raise InvalidInputError("Sweep result is empty")
    best = max(result.candidates, key=lambda c: (c.mean, -c.spread))
    threshold = best.mean - best.standard_error
    eligible = [c.spread for c in result.candidates if c.mean >= threshold]
    return min(eligible)


__all__ = [
    "objective_value",
    "SweepCandidate",
    "SweepResult",
    "sweep_spread",
    "select_best"
]
