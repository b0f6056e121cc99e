# -*- coding: utf-8 -*-

"""
RECEIVABLES POOL libs
____________________________________________________________________________________________________
Engine libs Scenario
version : 1.0
____________________________________________________________________________________________________
Scenario documents: the full stochastic environment of a run
____________________________________________________________________________________________________
(c) Lafiteau Franck
"""

# import external modules
from __future__ import annotations
from typing import Any, Literal, Optional, Union
from hashlib import sha256
import json
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

# import config
from .. import config

# import logger
from .. import logger

# import header
from ..header import BorrowerMode, ScenarioError

# import lib structures
from ..pricing import RateSet
from ..credit_model import RatingModel, DefaultPopulation, sample_true_default_prob
from ..demand import DemandCurve
from ..metrics import per_period_rate


class FrozenModel(BaseModel):
    """
    Base of every scenario section, unknown keys are rejected
    """
    model_config = ConfigDict(extra="forbid", frozen=True)


# ----- Distribution ----- #
class Distribution(FrozenModel):
    """
    Sampled agent parameter. A bare number in a document means a constant.
    """
    kind: Literal["constant", "uniform", "choice", "poisson"] = "constant"
    value: float = 0.0
    low: Optional[float] = None
    high: Optional[float] = None
    values: Optional[tuple[float, ...]] = None
    lam: Optional[float] = Field(default=None, ge=0)

    @model_validator(mode="before")
    @classmethod
    def _from_number(cls, data: Any) -> Any:
        if isinstance(data, (int, float)) and not isinstance(data, bool):
            return {"kind": "constant", "value": data}
        return data

    @model_validator(mode="after")
    def _check_parameters(self) -> Distribution:
        if self.kind == "uniform":
            if self.low is None or self.high is None or self.low > self.high:
                raise ValueError("uniform needs low <= high")
        elif self.kind == "choice":
            if not self.values:
                raise ValueError("choice needs a non-empty values list")
        elif self.kind == "poisson":
            if self.lam is None:
                raise ValueError("poisson needs lam")
        return self

    @property
    def minimum(self) -> float:
        """
        Smallest value the distribution can produce
        """
        match self.kind:
            case "constant":
                return self.value
            case "uniform":
                return self.low
            case "choice":
                return min(self.values)
            case _:
                return 0.0

    def sample(self, rng: np.random.Generator) -> float:
        match self.kind:
            case "constant":
                return float(self.value)
            case "uniform":
                return float(rng.uniform(self.low, self.high))
            case "choice":
                return float(self.values[rng.integers(len(self.values))])
            case _:
                return float(rng.poisson(self.lam))


def _positive(dist: Distribution, name: str) -> Distribution:
    if not dist.minimum > 0:
        raise ValueError(f"{name} must stay positive, minimum is {dist.minimum}")
    return dist


def _probability(dist: Distribution, name: str) -> Distribution:
    if dist.minimum < 0 or _maximum(dist) > 1:
        raise ValueError(f"{name} must stay within [0, 1]")
    return dist


def _maximum(dist: Distribution) -> float:
    match dist.kind:
        case "constant":
            return dist.value
        case "uniform":
            return dist.high
        case "choice":
            return max(dist.values)
        case _:
            return float("inf")


# ----- Sections ----- #
class RatingConfig(FrozenModel):
    a: float = 1.0
    b: float = 0.0
    sigma: float = Field(default=0.0, ge=0)
    p_max: float = Field(default=config.DEFAULT_P_MAX, gt=0, le=1)

    def model(self) -> RatingModel:
        return RatingModel(self.a, self.b, self.sigma, self.p_max)


class DefaultsConfig(FrozenModel):
    """
    True default probabilities: a Beta population, or a fixed value for every borrower
    """
    beta_a: float = Field(default=2.0, gt=0)
    beta_b: float = Field(default=400.0, gt=0)
    fixed: Optional[float] = Field(default=None, ge=0, le=1)

    @property
    def population(self) -> DefaultPopulation:
        return DefaultPopulation(self.beta_a, self.beta_b)

    def sample(self, rng: np.random.Generator) -> float:
        if self.fixed is not None:
            return self.fixed
        return sample_true_default_prob(self.population, rng)


class DemandConfig(FrozenModel):
    """
    Acceptance curve, s0 is annualized
    """
    phi: float = -10.0
    s0: float = Field(default=0.3, ge=0)
    always_accept: bool = False

    @field_validator("phi")
    @classmethod
    def _negative_phi(cls, phi: float) -> float:
        if not phi < 0:
            raise ValueError(f"phi must be negative, got {phi}")
        return phi


class BorrowerConfig(FrozenModel):
    mode: BorrowerMode = BorrowerMode.CONSTANT
    size: int = Field(default=0, ge=0)
    arrivals: Distribution = Distribution()
    schedule_total: Distribution = Distribution(value=100.0)
    n_installments: Distribution = Distribution(value=6.0)

    @model_validator(mode="after")
    def _check_distributions(self) -> BorrowerConfig:
        _positive(self.schedule_total, "schedule_total")
        if self.n_installments.minimum < 1:
            raise ValueError("n_installments must stay >= 1")
        if self.arrivals.minimum < 0:
            raise ValueError("arrivals must stay >= 0")
        return self


class GuarantorConfig(FrozenModel):
    """
    Guarantor involvement, s_g is annualized
    """
    frequency: float = Field(default=0.0, ge=0, le=1)
    collateral: Distribution = Distribution(value=50.0)
    s_g: Distribution = Distribution()
    rating: RatingConfig = RatingConfig()
    force: bool = False

    @model_validator(mode="after")
    def _check_distributions(self) -> GuarantorConfig:
        _positive(self.collateral, "collateral")
        if self.s_g.minimum < 0:
            raise ValueError("s_g must stay >= 0")
        return self


class InvestorConfig(FrozenModel):
    """
    Seed investor and investor flux, expected returns are annualized
    """
    seed_amount: float = Field(default=config.DEFAULT_SEED_AMOUNT, gt=0)
    seed_permanent: bool = True
    arrivals: Distribution = Distribution()
    amount: Distribution = Distribution(value=10.0)
    expected_return: Distribution = Distribution()
    eval_window: int = Field(default=config.DEFAULT_METRIC_WINDOW, ge=1)
    profit_withdraw_rate: Distribution = Distribution()
    loss_withdraw_rate: Distribution = Distribution()
    min_holding: Distribution = Distribution()
    enter_blind: bool = True
    max_wait: int = Field(default=config.DEFAULT_INVESTOR_MAX_WAIT, ge=0)

    @model_validator(mode="after")
    def _check_distributions(self) -> InvestorConfig:
        _positive(self.amount, "amount")
        _probability(self.profit_withdraw_rate, "profit_withdraw_rate")
        _probability(self.loss_withdraw_rate, "loss_withdraw_rate")
        if self.min_holding.minimum < 0 or self.arrivals.minimum < 0:
            raise ValueError("min_holding and arrivals must stay >= 0")
        return self


# ----- ScenarioConfig ----- #
class ScenarioConfig(FrozenModel):
    """
    Full stochastic environment of a run. r, s and every spread are annualized
    decimals, converted per period with the compound root.
    """
    name: str = "scenario"
    horizon: int = Field(default=36, ge=0)
    periods_per_year: int = Field(default=config.DEFAULT_PERIODS_PER_YEAR, ge=1)
    r: float = Field(default=0.10, ge=0)
    s: float = Field(default=0.10, ge=0)
    improvement_threshold: float = Field(default=config.DEFAULT_IMPROVEMENT_THRESHOLD, ge=0)
    p_refuse: float = Field(default=config.DEFAULT_P_REFUSE, ge=0, le=1)
    metric_window: int = Field(default=config.DEFAULT_METRIC_WINDOW, ge=1)
    defaults: DefaultsConfig = DefaultsConfig()
    rating: RatingConfig = RatingConfig()
    demand: DemandConfig = DemandConfig()
    borrowers: BorrowerConfig = BorrowerConfig()
    guarantors: GuarantorConfig = GuarantorConfig()
    investors: InvestorConfig = InvestorConfig()

    # Derived values
    @property
    def r_per_period(self) -> float:
        return per_period_rate(self.r, self.periods_per_year)

    @property
    def s_per_period(self) -> float:
        return per_period_rate(self.s, self.periods_per_year)

    @property
    def rates(self) -> RateSet:
        return RateSet(self.r_per_period, self.s_per_period)

    @property
    def demand_curve(self) -> DemandCurve:
        return DemandCurve(self.demand.phi, per_period_rate(self.demand.s0, self.periods_per_year))

    def with_spread(self, s: float) -> ScenarioConfig:
        """
        Copy of the scenario with another annualized platform spread
        """
        return self.model_validate({**self.model_dump(mode="json"), "s": s})

    def digest(self) -> str:
        """
        sha256 of the canonical JSON document
        """
        canonical = json.dumps(self.model_dump(mode="json"), sort_keys=True, separators=(",", ":"))
        return sha256(canonical.encode("utf-8")).hexdigest()

    # Loading methods
    @classmethod
    def from_dict(cls, data: dict) -> ScenarioConfig:
        try:
            return cls.model_validate(data)
        except ValidationError as e:
            fields = "; ".join(
                f"{'.'.join(str(loc) for loc in err['loc']) or '<root>'}: {err['msg']}"
                for err in e.errors()
            )
            raise ScenarioError(f"Invalid scenario ({e.error_count()} errors): {fields}") from e

    @classmethod
    def load(cls, path: str) -> ScenarioConfig:
        """
        Load a scenario from a JSON document
        """
        try:
            with open(path, "r", encoding="utf-8") as file:
                data = json.load(file)
        except (OSError, json.JSONDecodeError) as e:
            raise ScenarioError(f"Cannot read scenario {path}: {e}") from e
        if not isinstance(data, dict):
            raise ScenarioError(f"Scenario {path} must hold a JSON object")
        scenario = cls.from_dict(data)
        logger.info(f"[Scenario] {scenario.name} loaded from {path}")
        return scenario


__all__ = [
    "Distribution",
    "RatingConfig",
    "DefaultsConfig",
    "DemandConfig",
    "BorrowerConfig",
    "GuarantorConfig",
    "InvestorConfig",
    "ScenarioConfig"
]
