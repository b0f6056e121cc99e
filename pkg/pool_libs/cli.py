# -*- coding: utf-8 -*-

"""
RECEIVABLES POOL libs
____________________________________________________________________________________________________
CLI lib
version : 1.0
____________________________________________________________________________________________________
Command line surface: price, simulate, optimize and validate subcommands.
Exit codes: 0 success, 1 invalid input or failed check, 2 usage error
____________________________________________________________________________________________________
(c) Lafiteau Franck
"""

# import external modules
from __future__ import annotations
from typing import Any, Optional, Sequence, TextIO
from itertools import product
from os.path import join
from os import makedirs
import argparse
import json
import math
import sys
import numpy as np
import pandas as pd

# import config
from . import config, __version__

# import logger
from . import logger

# import header
from .header import InvalidInputError, Objective

# import libs
from .pricing import ReceivableSchedule, RateSet, GuarantorTerms, anticipation, anticipation_with_guarantor
from .metrics import per_period_rate, ensemble_stats, mean_and_standard_error, annualize
from .engine.scenario import ScenarioConfig
from .engine.result import RunResult
from .engine.engine import run_batch
from .optimizer import sweep_spread, select_best
from .validation import VALIDATION_CHECKS, run_checks

EXIT_OK: int = 0
EXIT_FAILURE: int = 1
EXIT_USAGE: int = 2

SUMMARY_METRICS: list[str] = [
    "quota_value",
    "one_period_return",
    "trailing_return",
    "total_assets",
    "loan_book_value",
    "allocation_ratio",
    "investor_count",
    "borrower_count"
]


class UsageError(Exception):
    """
    Flag combination the parser cannot reject by itself
    """


# ----- Output helpers ----- #
def _clean(value: Any) -> Any:
    """
    JSON-safe copy: NaN and infinities become null, numpy scalars become floats
    """
    if isinstance(value, dict):
        return {key: _clean(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_clean(item) for item in value]
    if isinstance(value, (np.floating, float)):
        return float(value) if math.isfinite(value) else None
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    return value


def _write_json(path: str, data: dict) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as file:
        json.dump(_clean(data), file, indent=2, sort_keys=True, allow_nan=False)
        file.write("\n")


def _write_csv(frame: pd.DataFrame, target: str | TextIO) -> None:
    frame.to_csv(target, index=False, float_format=config.FLOAT_FORMAT, lineterminator="\n")


def _manifest(command: str, scenario: ScenarioConfig, seed: int, runs: int, **extra: Any) -> dict:
    return {
        "tool": "pool_libs",
        "version": __version__,
        "command": command,
        "config_digest": scenario.digest(),
        "seed": seed,
        "runs": runs,
        "scenario": scenario.model_dump(mode="json"),
        **extra
    }


# ----- price ----- #
def cmd_price(args: argparse.Namespace, out: Optional[TextIO]=None) -> int:
    """
    Quote table over the product of every given value
    """
    guarantor_flags = [args.vc, args.pg, args.sg]
    if any(flag is not None for flag in guarantor_flags) and not all(flag is not None for flag in guarantor_flags):
        raise UsageError("--vc, --pg and --sg must be given together")
    guaranteed = args.vc is not None

    def rate(x: float) -> float:
        return per_period_rate(x, args.periods_per_year) if args.annual else x

    rows = []
    grid = product(args.total, args.N, args.p, args.r, args.s,
                   args.vc or [0.0], args.pg or [0.0], args.sg or [0.0])
    for total, N, p, r, s, V_c, p_g, s_g in grid:
        schedule = ReceivableSchedule.equal(total, N)
        rates = RateSet(rate(r), rate(s))
        A = anticipation(schedule, p, rates)
        if guaranteed:
            terms = GuarantorTerms.quote(V_c, p_g, rate(s_g), rates.r, schedule.N)
            rows.append([total, N, p, r, s, V_c, p_g, s_g, terms.G_s, A,
                         anticipation_with_guarantor(schedule, p, rates, terms)])
        else:
            rows.append([total, N, p, r, s, None, None, None, None, A, None])

    frame = pd.DataFrame(rows, columns=config.PRICE_COLUMNS)
    _write_csv(frame, args.out if args.out else (out or sys.stdout))
    return EXIT_OK


# ----- simulate ----- #
def summarize(results: list[RunResult], scenario: ScenarioConfig) -> dict:
    """
    Ensemble statistics per metric plus headline numbers
    """
    stats = {
        metric: ensemble_stats([result.column(metric) for result in results]).to_dict()
        for metric in SUMMARY_METRICS
    }
    run_returns = [float(np.nanmean(result.one_period_return)) if result.horizon > 0 else math.nan
                   for result in results]
    mean_return, se_return = mean_and_standard_error(run_returns)
    return {
        "runs": len(results),
        "horizon": scenario.horizon,
        "mean_one_period_return": mean_return,
        "standard_error_one_period_return": se_return,
        "mean_annualized_return": annualize(mean_return, scenario.periods_per_year),
        "target_annualized_return": annualize(scenario.r_per_period + scenario.s_per_period,
                                              scenario.periods_per_year),
        "terminal_quota_value_mean": float(np.mean([result.quota_value[-1] for result in results])),
        "series": stats
    }


def cmd_simulate(args: argparse.Namespace) -> int:
    scenario = ScenarioConfig.load(args.config)
    results = run_batch(scenario, args.runs, args.seed, args.workers)
    makedirs(args.out, exist_ok=True)

    _write_json(join(args.out, config.MANIFEST_FILE), _manifest("simulate", scenario, args.seed, args.runs))
    _write_csv(pd.concat([result.to_frame() for result in results], ignore_index=True),
               join(args.out, config.SERIES_FILE))
    _write_csv(pd.concat([result.transactions_frame() for result in results], ignore_index=True),
               join(args.out, config.TRANSACTIONS_FILE))
    _write_json(join(args.out, config.SUMMARY_FILE), summarize(results, scenario))
    logger.info(f"[CLI] Simulation bundle written to {args.out}")
    return EXIT_OK


# ----- optimize ----- #
def cmd_optimize(args: argparse.Namespace) -> int:
    scenario = ScenarioConfig.load(args.config)
    objective = Objective(args.objective)
    result = sweep_spread(scenario, args.spreads, args.runs, args.seed, objective, args.workers)
    best = select_best(result)
    makedirs(args.out, exist_ok=True)

    _write_json(join(args.out, config.MANIFEST_FILE), _manifest(
        "optimize", scenario, args.seed, args.runs, spreads=list(args.spreads), objective=objective.value
    ))
    _write_csv(result.to_frame(), join(args.out, config.SWEEP_FILE))
    _write_json(join(args.out, config.BEST_FILE), {
        "best_spread": best,
        "objective": objective.value,
        "candidates": [
            {"spread": c.spread, "mean": c.mean, "standard_error": c.standard_error, "relative_volume": rel}
            for c, rel in zip(result.candidates, result.relative_volumes)
        ]
    })
    logger.info(f"[CLI] Best spread {best} written to {args.out}")
    return EXIT_OK


# ----- validate ----- #
def cmd_validate(args: argparse.Namespace, out: Optional[TextIO]=None) -> int:
    names = args.only
    if names:
        unknown = [name for name in names if name not in VALIDATION_CHECKS]
        if unknown:
            raise UsageError(f"Unknown checks {unknown}, available: {', '.join(VALIDATION_CHECKS)}")
    reports = run_checks(names, args.runs, args.seed, args.workers)
    for report in reports:
        print(report, file=out or sys.stdout)
    if args.out:
        _write_json(args.out, {"checks": [report.to_dict() for report in reports]})
    failed = [report.name for report in reports if not report.passed]
    print(f"{len(reports) - len(failed)}/{len(reports)} checks passed", file=out or sys.stdout)
    return EXIT_FAILURE if failed else EXIT_OK


# ----- Parser ----- #
def _spread_list(text: str) -> list[float]:
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"invalid spread list {text!r}") from e


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="anticipator",
        description="Receivables anticipation pool simulator"
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--debug", action="store_true", help="log debug records")
    sub = parser.add_subparsers(dest="command", required=True)

    price = sub.add_parser("price", help="quote anticipation offers")
    price.add_argument("--total", type=float, nargs="+", required=True)
    price.add_argument("--N", type=int, nargs="+", required=True)
    price.add_argument("--p", type=float, nargs="+", default=[0.0])
    price.add_argument("--r", type=float, nargs="+", default=[0.0])
    price.add_argument("--s", type=float, nargs="+", default=[0.0])
    price.add_argument("--vc", type=float, nargs="+")
    price.add_argument("--pg", type=float, nargs="+")
    price.add_argument("--sg", type=float, nargs="+")
    price.add_argument("--annual", action="store_true", help="r, s and sg are annualized")
    price.add_argument("--periods-per-year", type=int, default=config.DEFAULT_PERIODS_PER_YEAR)
    price.add_argument("--out", help="CSV file, stdout when omitted")

    simulate = sub.add_parser("simulate", help="run a scenario ensemble")
    simulate.add_argument("--config", required=True)
    simulate.add_argument("--seed", type=int, default=0)
    simulate.add_argument("--runs", type=int, default=1)
    simulate.add_argument("--workers", type=int, default=1)
    simulate.add_argument("--out", required=True, help="bundle directory")

    optimize = sub.add_parser("optimize", help="sweep the platform spread")
    optimize.add_argument("--config", required=True)
    optimize.add_argument("--spreads", type=_spread_list, required=True, help="comma separated annual spreads")
    optimize.add_argument("--runs", type=int, default=config.ENSEMBLE_RUNS)
    optimize.add_argument("--seed", type=int, default=0)
    optimize.add_argument("--objective", choices=[o.value for o in Objective], default=Objective.MEAN.value)
    optimize.add_argument("--workers", type=int, default=1)
    optimize.add_argument("--out", required=True, help="bundle directory")

    validate = sub.add_parser("validate", help="run the reference scenario checks")
    validate.add_argument("--only", nargs="+", metavar="CHECK")
    validate.add_argument("--runs", type=int, default=config.ENSEMBLE_RUNS)
    validate.add_argument("--seed", type=int, default=0)
    validate.add_argument("--workers", type=int, default=1)
    validate.add_argument("--out", help="JSON report file")
    return parser


COMMANDS = {
    "price": cmd_price,
    "simulate": cmd_simulate,
    "optimize": cmd_optimize,
    "validate": cmd_validate
}


def main(argv: Optional[Sequence[str]]=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    if args.debug:
        config.LOG_DEBUG = True

    for flag in ("runs", "workers"):
        if getattr(args, flag, 1) < 1:
            parser.print_usage(sys.stderr)
            print(f"{parser.prog}: error: --{flag} must be >= 1", file=sys.stderr)
            return EXIT_USAGE

    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidInputError as e:
        logger.error(f"[CLI] {e}")
        return EXIT_FAILURE
    except Exception as e:
        logger.fatal(f"[CLI] {args.command} interrupted by {type(e).__name__}: {e}")


__all__ = [
    "build_parser",
    "main",
    "summarize",
    "cmd_price",
    "cmd_simulate",
    "cmd_optimize",
    "cmd_validate"
]
