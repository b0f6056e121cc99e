# -*- coding: utf-8 -*-

"""
RECEIVABLES POOL libs
____________________________________________________________________________________________________
Validation lib
version : 1.0
____________________________________________________________________________________________________
Named reference scenarios checking the simulator against known behaviours:
base rate without borrowers, full allocation, saturated market, pricing oracle,
guarantor hedging and neutrality, rating bias, default variance, investor flux,
spread sweep shape and determinism
____________________________________________________________________________________________________
(c) Lafiteau Franck
"""

# import external modules
from __future__ import annotations
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Optional
import numpy as np

# import config
from . import config

# import logger
from . import logger

# import header
from .header import InvalidInputError, Objective

# import libs
from .pricing import (
    ReceivableSchedule, RateSet, GuarantorTerms,
    anticipation, anticipation_with_guarantor, payment_oracle
)
from .metrics import annualize, mean_and_standard_error, ensemble_stats
from .engine.scenario import ScenarioConfig
from .engine.result import RunResult
from .engine.engine import run, run_batch, derive_seed
from .optimizer import sweep_spread, select_best


# ----- Reports ----- #
@dataclass
class CheckReport:
    """
    Outcome of one validation check, measured values next to the expectation
    """
    name: str
    passed: bool
    expected: str
    measured: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "expected": self.expected, "measured": self.measured}

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        values = ", ".join(f"{key}={_fmt(value)}" for key, value in self.measured.items())
        return f"[{status}] {self.name}: {values} (expected {self.expected})"


def _fmt(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


CheckFunc = Callable[[int, int, int], CheckReport]
VALIDATION_CHECKS: dict[str, CheckFunc] = {}


def validation_check(name: str) -> Callable[[CheckFunc], CheckFunc]:
    """Decorator to register a check under its command line name."""
    def decorator(func: CheckFunc) -> CheckFunc:
        VALIDATION_CHECKS[name] = func
        return func
    return decorator


# ----- Scenario helpers ----- #
def _scenario(name: str, **sections: Any) -> ScenarioConfig:
    return ScenarioConfig.from_dict({"name": name, **sections})


def _mean_returns(results: Iterable[RunResult]) -> np.ndarray:
    """
    Per-run mean one period return over periods 1..horizon
    """
    return np.array([np.nanmean(result.one_period_return) for result in results])


def _lending_market(name: str, size: int, beta_b: Optional[float]=None, **overrides: Any) -> dict:
    """
    Constant population of small equal-installment borrowers accepting every offer
    """
    defaults = {"fixed": 0.0} if beta_b is None else {"beta_a": 2.0, "beta_b": beta_b}
    document = {
        "name": name,
        "horizon": 36,
        "r": 0.10,
        "s": 0.10,
        "defaults": defaults,
        "demand": {"always_accept": True},
        "borrowers": {"mode": "constant", "size": size, "schedule_total": 1.0, "n_installments": 6}
    }
    for key, value in overrides.items():
        if isinstance(value, dict) and isinstance(document.get(key), dict):
            document[key] = {**document[key], **value}
        else:
            document[key] = value
    return document


# ----- Checks ----- #
@validation_check("no_borrowers")
def check_no_borrowers(runs: int, seed: int, workers: int) -> CheckReport:
    scenario = _scenario("no_borrowers", horizon=36, r=0.10, s=0.10)
    result = run(scenario, seed)
    r = scenario.r_per_period
    returns = result.one_period_return
    worst = float(np.max(np.abs(returns - r)) / r)
    trailing = result.column("trailing_return")[-1]
    return CheckReport(
        "no_borrowers",
        worst <= config.RELATIVE_TOLERANCE,
        f"every return equal to r={r:.6g} within {config.RELATIVE_TOLERANCE:g} relative",
        {"r_per_period": r, "worst_relative_error": worst, "terminal_trailing_return": float(trailing)}
    )


@validation_check("full_allocation")
def check_full_allocation(runs: int, seed: int, workers: int) -> CheckReport:
    scenario = ScenarioConfig.from_dict(_lending_market("full_allocation", 500))
    result = run(scenario, seed)
    total = result.total_assets
    ratio = float(total[-1] / total[0])
    ceiling = scenario.rates.discount_base - 1.0
    overshoot = float(np.max(result.one_period_return - ceiling))
    bound = scenario.rates.discount_base ** scenario.horizon
    return CheckReport(
        "full_allocation",
        1.74 <= ratio <= 1.768 and overshoot <= config.RELATIVE_TOLERANCE,
        f"terminal ratio in [1.74, 1.768] (target ~1.761, bound {bound:.4f}), returns <= r+s",
        {"terminal_ratio": ratio, "max_return_above_r_plus_s": overshoot,
         "terminal_allocation": float(result.column("allocation_ratio")[-1])}
    )


@validation_check("saturated_market")
def check_saturated_market(runs: int, seed: int, workers: int) -> CheckReport:
    document = _lending_market("saturated_market", 10, horizon=60)
    # a loan cycle of n_installments + 1 periods divides the trailing window
    document["borrowers"] = {"mode": "recurring", "size": 10, "schedule_total": 5.0, "n_installments": 5}
    scenario = ScenarioConfig.from_dict(document)
    cycle = int(scenario.borrowers.n_installments.value) + 1
    result = run(scenario, seed)
    window = scenario.metric_window
    trailing = result.column("trailing_return")[window + 2:]
    rises = float(np.max(np.diff(trailing))) if trailing.size > 1 else 0.0
    allocation = result.column("allocation_ratio")[1::cycle]
    decreasing = bool(np.all(np.diff(allocation) < 0))
    return CheckReport(
        "saturated_market",
        rises <= 0.0005 and decreasing,
        "trailing return non-increasing after the plateau (+-0.05 pp), allocation strictly decreasing",
        {"max_trailing_rise": rises, "allocation_decreasing": decreasing,
         "terminal_trailing_return": float(trailing[-1]) if trailing.size else float("nan"),
         "annual_r": scenario.r}
    )


def _oracle_matches(schedule: ReceivableSchedule,
                    p: float,
                    rng: np.random.Generator,
                    trials: int,
                    z: float,
                    terms: Optional[GuarantorTerms]=None) -> tuple[bool, float]:
    """
    Whether the oracle mean lies within z standard errors of the closed form,
    and the distance in standard errors
    """
    rates = RateSet(0.0, 0.0)
    platform, _ = payment_oracle(schedule, p, rng, trials, rates, terms)
    closed = anticipation(schedule, p, rates) if terms is None else anticipation_with_guarantor(schedule, p, rates, terms)
    mean, se = float(platform.mean()), float(platform.std(ddof=1) / np.sqrt(trials))
    gap = abs(mean - closed)
    if se == 0:
        return gap <= config.RELATIVE_TOLERANCE * max(abs(closed), 1.0), 0.0
    return gap <= z * se, gap / se


@validation_check("pricing_oracle")
def check_pricing_oracle(runs: int, seed: int, workers: int,
                         trials: int=config.ORACLE_TRIALS,
                         z: float=config.ORACLE_STANDARD_ERRORS) -> CheckReport:
    rng = np.random.default_rng(seed)
    anchor = ReceivableSchedule.equal(100.0, 3)
    anchor_value = anticipation(anchor, 0.1, RateSet(0.0, 0.0))
    anchor_ok, anchor_z = _oracle_matches(anchor, 0.1, rng, trials, z)

    failures = 0
    worst = anchor_z
    for _ in range(config.ORACLE_CASES):
        schedule = ReceivableSchedule.equal(float(rng.uniform(10.0, 1000.0)), int(rng.integers(1, 13)))
        p = float(rng.uniform(0.0, 0.3))
        terms = GuarantorTerms.quote(
            float(rng.uniform(0.0, schedule.total())),
            float(rng.uniform(0.0, 0.3)),
            float(rng.uniform(0.0, 0.05)),
            0.0, schedule.N
        )
        for case_terms in (None, terms):
            ok, distance = _oracle_matches(schedule, p, rng, trials, z, case_terms)
            failures += not ok
            worst = max(worst, distance)

    return CheckReport(
        "pricing_oracle",
        anchor_ok and round(anchor_value, 2) == 81.30 and failures == 0,
        f"oracle within {z:g} standard errors on {2 * config.ORACLE_CASES} cases, anchor 81.30",
        {"anchor": anchor_value, "failures": failures, "worst_standard_errors": worst}
    )


@validation_check("guarantor_hedging")
def check_guarantor_hedging(runs: int, seed: int, workers: int) -> CheckReport:
    p = 0.1
    rates = RateSet(0.0, 0.0)
    schedule = ReceivableSchedule.equal(100.0, 3)
    terms = GuarantorTerms.quote(50.0, 0.05, 0.02, 0.0, 3)
    A_plain = anticipation(schedule, p, rates)
    A_guaranteed = anticipation_with_guarantor(schedule, p, rates, terms)
    trials = 100 * 100

    gaps: dict[str, Any] = {"A": A_plain, "A_g": A_guaranteed, "G_s": terms.G_s}
    hedged = True
    for p_true in (0.05, 0.10, 0.15, 0.20, 0.25):
        plain, _ = payment_oracle(schedule, p_true, np.random.default_rng(seed), trials, rates)
        guaranteed, _ = payment_oracle(schedule, p_true, np.random.default_rng(seed), trials, rates, terms)
        gap_plain = abs(A_plain - plain.mean())
        gap_guaranteed = abs(A_guaranteed - guaranteed.mean())
        gaps[f"gap_plain@{p_true:.2f}"] = float(gap_plain)
        gaps[f"gap_guaranteed@{p_true:.2f}"] = float(gap_guaranteed)
        if p_true > p and not gap_guaranteed < gap_plain:
            hedged = False

    return CheckReport(
        "guarantor_hedging",
        hedged,
        "guaranteed gap smaller than plain gap for every p_T > p",
        gaps
    )


@validation_check("guarantor_neutrality")
def check_guarantor_neutrality(runs: int, seed: int, workers: int) -> CheckReport:
    guarantors = {"frequency": 1.0, "force": True, "collateral": 0.5, "s_g": 0.0}

    # (a) p_g = p on risky borrowers, ensemble means
    plain = ScenarioConfig.from_dict(_lending_market("neutrality_plain", 200, beta_b=200.0))
    guaranteed = ScenarioConfig.from_dict(
        _lending_market("neutrality_guaranteed", 200, beta_b=200.0, guarantors=guarantors)
    )
    mean_plain, se_plain = mean_and_standard_error(_mean_returns(run_batch(plain, runs, seed, workers)))
    mean_guaranteed, se_guaranteed = mean_and_standard_error(
        _mean_returns(run_batch(guaranteed, runs, seed, workers))
    )
    se_difference = float(np.hypot(se_plain, se_guaranteed))
    difference = abs(mean_guaranteed - mean_plain)
    ensemble_ok = difference <= 2.0 * se_difference

    # (b) no default, guarantors forced, identical fund evolution
    safe_plain = run(ScenarioConfig.from_dict(_lending_market("neutrality_safe_plain", 200)), seed)
    safe_guaranteed = run(ScenarioConfig.from_dict(
        _lending_market("neutrality_safe_guaranteed", 200, guarantors=guarantors)
    ), seed)
    quota_gap = float(np.max(np.abs(safe_guaranteed.quota_value / safe_plain.quota_value - 1.0)))
    evolution_ok = quota_gap <= config.RELATIVE_TOLERANCE

    return CheckReport(
        "guarantor_neutrality",
        ensemble_ok and evolution_ok,
        "ensemble means within 2 standard errors, riskless quota series identical within 1e-9",
        {"mean_plain": mean_plain, "mean_guaranteed": mean_guaranteed,
         "standard_error_difference": se_difference, "riskless_quota_gap": quota_gap}
    )


@validation_check("rating_bias")
def check_rating_bias(runs: int, seed: int, workers: int) -> CheckReport:
    rating = {"a": 0.8, "b": 0.0, "sigma": 0.0}
    risky = ScenarioConfig.from_dict(
        _lending_market("rating_bias_risky", 300, beta_b=80.0, r=0.02, s=0.02, rating=rating)
    )
    tolerable = ScenarioConfig.from_dict(
        _lending_market("rating_bias_tolerable", 300, beta_b=200.0, r=0.02, s=0.02, rating=rating)
    )
    risky_mean, _ = mean_and_standard_error(_mean_returns(run_batch(risky, runs, seed, workers)))
    tolerable_results = run_batch(tolerable, runs, seed, workers)
    tolerable_mean, _ = mean_and_standard_error(_mean_returns(tolerable_results))
    allocation = float(np.mean([r.column("allocation_ratio")[:-1].mean() for r in tolerable_results]))
    target = tolerable.r_per_period + tolerable.s_per_period * allocation

    # lent money loses the default rate the rating engine misses
    model = tolerable.rating
    missed = (1.0 - model.a) * tolerable.defaults.population.mean - model.b
    ppy = tolerable.periods_per_year
    annual_return = annualize(tolerable_mean, ppy)
    annual_target = annualize(target, ppy)
    adjusted_target = annualize(target - missed * allocation, ppy)
    return CheckReport(
        "rating_bias",
        risky_mean < 0 and abs(annual_return - adjusted_target) <= 0.01,
        "Beta(2,80) mean return negative, Beta(2,200) annualized return within 1 pp "
        "of r + s*allocation less the missed default rate",
        {"mean_return_beta_2_80": risky_mean, "annualized_return_beta_2_200": annual_return,
         "annualized_target": annual_target, "annualized_adjusted_target": adjusted_target,
         "annualized_gap_to_target": annual_target - annual_return}
    )


def _excess_returns(results: list[RunResult], scenario: ScenarioConfig) -> np.ndarray:
    """
    Per-run mean of the return minus r + s * allocation at the start of the period
    """
    excess = []
    for result in results:
        allocation = result.column("allocation_ratio")[:-1]
        target = scenario.r_per_period + scenario.s_per_period * allocation
        excess.append(np.nanmean(result.one_period_return - target))
    return np.array(excess)


@validation_check("default_variance")
def check_default_variance(runs: int, seed: int, workers: int) -> CheckReport:
    measured: dict[str, Any] = {}
    passed = True
    iqr: dict[float, float] = {}
    for beta_b in (400.0, 150.0):
        scenario = ScenarioConfig.from_dict(_lending_market(f"default_variance_{beta_b:g}", 300, beta_b=beta_b))
        results = run_batch(scenario, runs, seed, workers)
        excess, se = mean_and_standard_error(_excess_returns(results, scenario))
        stats = ensemble_stats([result.one_period_return for result in results])
        iqr[beta_b] = float(np.nanmean(stats.iqr))
        passed = passed and abs(excess) <= 2.0 * se
        measured[f"excess_beta_2_{beta_b:g}"] = excess
        measured[f"standard_error_beta_2_{beta_b:g}"] = se
        measured[f"mean_iqr_beta_2_{beta_b:g}"] = iqr[beta_b]
    return CheckReport(
        "default_variance",
        passed and iqr[150.0] > iqr[400.0],
        "excess over r + s*allocation within 2 standard errors, wider IQR for Beta(2,150)",
        measured
    )


@validation_check("investor_flux")
def check_investor_flux(runs: int, seed: int, workers: int) -> CheckReport:
    scenario = _scenario(
        "investor_flux", horizon=36, r=0.10, s=0.10,
        investors={
            "arrivals": 1, "amount": 10.0, "min_holding": 3,
            "profit_withdraw_rate": 1.0, "loss_withdraw_rate": 1.0
        }
    )
    result = run(scenario, seed)
    counts = result.column("investor_count")[3:]
    r = scenario.r_per_period
    worst = float(np.max(np.abs(result.one_period_return - r)) / r)
    return CheckReport(
        "investor_flux",
        bool(np.all(counts == 4)) and worst <= config.RELATIVE_TOLERANCE,
        "4 investors from period 3 on, returns equal r within 1e-9 relative",
        {"counts": sorted(set(int(c) for c in counts)), "worst_relative_error": worst}
    )


@validation_check("spread_sweep")
def check_spread_sweep(runs: int, seed: int, workers: int) -> CheckReport:
    grid = [0.0, 0.15, 0.3, 0.6, 1.2, 2.4]
    demand = {"phi": -30.0, "s0": 0.3, "always_accept": False}
    unbiased = ScenarioConfig.from_dict(_lending_market("sweep_unbiased", 300, beta_b=200.0, demand=demand))
    biased = ScenarioConfig.from_dict(
        _lending_market("sweep_biased", 300, beta_b=200.0, demand=demand, rating={"a": 2.0})
    )
    sweep_runs = max(1, min(runs, 10))
    unbiased_sweep = sweep_spread(unbiased, grid, sweep_runs, seed, Objective.MEAN, workers)
    biased_sweep = sweep_spread(biased, grid, sweep_runs, seed, Objective.MEAN, workers)
    argmax_unbiased = grid[int(np.argmax(unbiased_sweep.means))]
    argmax_biased = grid[int(np.argmax(biased_sweep.means))]
    return CheckReport(
        "spread_sweep",
        grid[0] < argmax_unbiased < grid[-1] and argmax_biased <= argmax_unbiased,
        "interior argmax, biased argmax <= unbiased argmax",
        {"argmax_unbiased": argmax_unbiased, "argmax_biased": argmax_biased,
         "best_unbiased": select_best(unbiased_sweep), "best_biased": select_best(biased_sweep),
         "relative_volumes": [round(float(v), 4) for v in unbiased_sweep.relative_volumes]}
    )


@validation_check("determinism")
def check_determinism(runs: int, seed: int, workers: int) -> CheckReport:
    scenario = ScenarioConfig.from_dict(_lending_market(
        "determinism", 50, beta_b=150.0, horizon=24,
        guarantors={"frequency": 0.3, "s_g": 0.02},
        investors={"arrivals": {"kind": "poisson", "lam": 0.5}, "loss_withdraw_rate": 0.2, "min_holding": 3}
    ))
    n_runs = max(2, min(runs, 4))
    first = run_batch(scenario, n_runs, seed)
    second = run_batch(scenario, n_runs, seed)
    parallel = run_batch(scenario, n_runs, seed, max(workers, 2))
    single = run(scenario, derive_seed(seed, 0))

    def dump(results: list[RunResult]) -> str:
        return "".join(r.to_frame().to_csv(index=False, float_format=config.FLOAT_FORMAT) for r in results)

    rerun_ok = dump(first) == dump(second)
    parallel_ok = dump(first) == dump(parallel)
    singleton_ok = dump([first[0]]) == dump([single])
    return CheckReport(
        "determinism",
        rerun_ok and parallel_ok and singleton_ok,
        "identical output for reruns, parallel batches and run(derive_seed(seed, 0))",
        {"rerun_identical": rerun_ok, "parallel_identical": parallel_ok, "singleton_identical": singleton_ok}
    )


# ----- Suite ----- #
def run_checks(names: Optional[Iterable[str]]=None,
               runs: int=config.ENSEMBLE_RUNS,
               seed: int=0,
               workers: int=1) -> list[CheckReport]:
    """
    Run the named checks (all of them by default) in registration order
    """
    selected = list(VALIDATION_CHECKS) if names is None else list(names)
    unknown = [name for name in selected if name not in VALIDATION_CHECKS]
    if unknown:
        raise InvalidInputError(f"Unknown checks {unknown}, available: {list(VALIDATION_CHECKS)}")

    reports: list[CheckReport] = []
    for name in selected:
        logger.info(f"[Validation] Running {name}")
        report = VALIDATION_CHECKS[name](runs, seed, workers)
        if report.passed:
            logger.info(str(report))
        else:
            logger.warning(str(report))
        reports.append(report)
    return reports


__all__ = [
    "CheckReport",
    "VALIDATION_CHECKS",
    "validation_check",
    "run_checks"
]
