# -*- coding: utf-8 -*-

"""
RECEIVABLES POOL libs
____________________________________________________________________________________________________
pool_libs.config
version : 1.0
____________________________________________________________________________________________________
Contains config of all default constants of the simulator
____________________________________________________________________________________________________
(c) Lafiteau Franck
"""

# import external module
from os.path import join

# ----- System constants ----- #
LOG: bool = True
LOG_DEBUG: bool = False
LOG_FOLDER: str = join("cache", "logs")

# ----- Time constants ----- #
DEFAULT_PERIODS_PER_YEAR: int = 12
DEFAULT_METRIC_WINDOW: int = 18 # periods

# ----- Pricing constants ----- #
DEFAULT_P_MAX: float = 0.99
DEFAULT_P_REFUSE: float = 0.5
DEFAULT_IMPROVEMENT_THRESHOLD: float = 0.10

# ----- Ledger constants ----- #
INITIAL_QUOTA_VALUE: float = 1.0
RELATIVE_TOLERANCE: float = 1e-9

# ----- Agents constants ----- #
DEFAULT_SEED_AMOUNT: float = 100.0
DEFAULT_INVESTOR_MAX_WAIT: int = 12 # periods

# ----- Engine constants ----- #
PHASE_PRIORITY: list[str] = [
    "accrual_phase",
    "collection_phase",
    "investor_phase",
    "origination_phase",
    "metrics_phase"
]
RANDOM_STREAMS: tuple[str, ...] = (
    "borrowers",
    "rating",
    "guarantors",
    "demand",
    "outcomes",
    "investors"
)

# ----- Output constants ----- #
MANIFEST_FILE: str = "manifest.json"
SERIES_FILE: str = "series.csv"
TRANSACTIONS_FILE: str = "transactions.csv"
SUMMARY_FILE: str = "summary.json"
SWEEP_FILE: str = "sweep.csv"
BEST_FILE: str = "best.json"
FLOAT_FORMAT: str = "%.12g"

SERIES_COLUMNS: list[str] = [
    "run",
    "period",
    "cash",
    "loan_book_value",
    "collateral_liability",
    "total_assets",
    "quota_value",
    "one_period_return",
    "trailing_return",
    "allocation_ratio",
    "investor_count",
    "borrower_count",
    "originated_volume",
    "originated_count",
    "default_count",
    "refused_count",
    "declined_count",
    "unfunded_count"
]
TRANSACTION_COLUMNS: list[str] = ["run", "period", "type", "amount"]
SWEEP_COLUMNS: list[str] = ["spread", "run", "objective"]
PRICE_COLUMNS: list[str] = ["total", "N", "p", "r", "s", "V_c", "p_g", "s_g", "G_s", "A", "A_g"]

# ----- Validation constants ----- #
ORACLE_TRIALS: int = 100_000
ORACLE_CASES: int = 20
ORACLE_STANDARD_ERRORS: float = 3.0
ENSEMBLE_RUNS: int = 100
