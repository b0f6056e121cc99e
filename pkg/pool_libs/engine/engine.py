# -*- coding: utf-8 -*-

"""
RECEIVABLES POOL libs
____________________________________________________________________________________________________
Engine libs Engine
version : 1.0
____________________________________________________________________________________________________
Contains the discrete time scheduler, seeded runs and Monte Carlo batches
____________________________________________________________________________________________________
(c) Lafiteau Franck
"""

# import external modules
from __future__ import annotations
from dataclasses import dataclass, field
from concurrent.futures import ProcessPoolExecutor
from math import nan
import numpy as np
import pandas as pd

# import config
from .. import config

# import logger
from .. import logger

# import header
from ..header import InvalidInputError

# import libs
from ..pricing import RateSet
from ..credit_model import RatingModel
from ..demand import DemandCurve
from ..ledger.pool import PoolLedger
from ..agents.components import BorrowerSpec, InvestorState
from ..agents.population import spawn_seed_investor

# import scenario and result
from .scenario import ScenarioConfig
from .result import RunResult

# import phases so that they register themselves
from . import phases
from .registry import PHASE_REGISTRY


# ----- Random streams ----- #
@dataclass
class RandomStreams:
    """
    One generator per agent class, forked from the run seed so that adding
    investors does not perturb borrower draws
    """
    borrowers: np.random.Generator
    rating: np.random.Generator
    guarantors: np.random.Generator
    demand: np.random.Generator
    outcomes: np.random.Generator
    investors: np.random.Generator

    @classmethod
    def from_seed(cls, seed: int) -> RandomStreams:
        children = np.random.SeedSequence(seed).spawn(len(config.RANDOM_STREAMS))
        return cls(**{
            name: np.random.default_rng(child)
            for name, child in zip(config.RANDOM_STREAMS, children)
        })


def derive_seed(base_seed: int, index: int) -> int:
    """
    Seed of run index in a batch, independent of the other runs
    """
    if base_seed < 0 or index < 0:
        raise InvalidInputError(f"Seeds must be non-negative, got base {base_seed}, index {index}")
    return int(np.random.SeedSequence([base_seed, index]).generate_state(1, np.uint64)[0])


# ----- Simulation state ----- #
@dataclass
class SimulationState:
    """
    Everything a run mutates. Owned by a single run.
    """
    config: ScenarioConfig
    streams: RandomStreams
    ledger: PoolLedger = field(default_factory=PoolLedger)
    borrowers: dict[int, BorrowerSpec] = field(default_factory=dict)
    investors: list[InvestorState] = field(default_factory=list)
    period: int = 0
    next_borrower_id: int = 0
    next_investor_id: int = 1
    rows: list[dict] = field(default_factory=list)
    quota_history: list[float] = field(default_factory=list)
    transaction_cursor: int = 0

    # period counters
    period_originated_volume: float = 0.0
    period_originated_count: int = 0
    period_defaults: int = 0
    period_refused: int = 0
    period_declined: int = 0
    period_unfunded: int = 0

    def __post_init__(self) -> None:
        self.rates: RateSet = self.config.rates
        self.rating_model: RatingModel = self.config.rating.model()
        self.demand_curve: DemandCurve = self.config.demand_curve

    @classmethod
    def initial(cls, config: ScenarioConfig, seed: int) -> SimulationState:
        """
        State at t=0: the seed investor's deposit at quota value 1, recorded as the first row
        """
        state = cls(config, RandomStreams.from_seed(seed))
        seed_investor = spawn_seed_investor(config)
        state.ledger.deposit(seed_investor.id, seed_investor.spec.amount)
        state.investors.append(seed_investor)
        PHASE_REGISTRY["metrics_phase"](state, 0)
        return state

    def begin_period(self, period: int) -> None:
        self.period = period
        self.period_originated_volume = 0.0
        self.period_originated_count = 0
        self.period_defaults = 0
        self.period_refused = 0
        self.period_declined = 0
        self.period_unfunded = 0

    def trailing_return(self, window: int) -> float:
        """
        Annualized quota return over the last window recorded periods, NaN while history is short
        """
        history = self.quota_history
        if len(history) <= window or not history[-1 - window] > 0:
            return nan
        return (history[-1] / history[-1 - window]) ** (self.config.periods_per_year / window) - 1.0


# ----- Scheduler ----- #
def step(state: SimulationState, period: int) -> SimulationState:
    """
    Execute every phase of a period in config.PHASE_PRIORITY order
    """
    if period < 1:
        raise InvalidInputError(f"Period must be >= 1, got {period}")
    state.begin_period(period)
    for phase_name in config.PHASE_PRIORITY:
        phase_func = PHASE_REGISTRY.get(phase_name)
        if phase_func is None:
            logger.warning(f"Phase [{phase_name}] listed in config but missing in phases module")
            continue
        try:
            phase_func(state, period)
        except Exception as e:
            logger.error(f"Phase [{phase_name}] failed at period {period}: {type(e).__name__}: {e}")
            raise
        logger.debug(f"Phase [{phase_name}] executed successfully at period {period}")
    return state


def run(config: ScenarioConfig, seed: int, run_index: int=0) -> RunResult:
    """
    Run a scenario over its horizon. Bit-identical for identical (config, seed).
    """
    state = SimulationState.initial(config, seed)
    for period in range(1, config.horizon + 1):
        step(state, period)

    series = pd.DataFrame(state.rows)
    result = RunResult(seed, run_index, series, state.ledger.transactions_frame(), config.digest())
    logger.debug(f"[Engine] Run {run_index} of {config.name} done (seed {seed}, horizon {config.horizon})")
    return result


def run_batch(config: ScenarioConfig, n_runs: int, base_seed: int, workers: int=1) -> list[RunResult]:
    """
    Run n_runs independent replicas. Run i uses derive_seed(base_seed, i) and
    results are returned in run index order whatever the worker count.
    """
    if n_runs < 1:
        raise InvalidInputError(f"n_runs must be >= 1, got {n_runs}")
    if workers < 1:
        raise InvalidInputError(f"workers must be >= 1, got {workers}")
    seeds = [derive_seed(base_seed, i) for i in range(n_runs)]
    logger.info(f"[Engine] Batch of {n_runs} runs for {config.name} (base seed {base_seed}, {workers} workers)")

    if workers == 1 or n_runs == 1:
        return [run(config, seed, i) for i, seed in enumerate(seeds)]
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(run, [config] * n_runs, seeds, range(n_runs)))


__all__ = [
    "RandomStreams",
    "derive_seed",
    "SimulationState",
    "step",
    "run",
    "run_batch"
]
