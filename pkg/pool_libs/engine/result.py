# -*- coding: utf-8 -*-

"""
RECEIVABLES POOL libs
____________________________________________________________________________________________________
Engine libs Result
version : 1.0
____________________________________________________________________________________________________
Contains the per-period series of one seeded run
____________________________________________________________________________________________________
(c) Lafiteau Franck
"""

# import external modules
from __future__ import annotations
from dataclasses import dataclass
import numpy as np
import pandas as pd

# import config
from .. import config

# import header
from ..header import TransactionType as T


VOLUME_COLUMNS: list[str] = [f"volume_{ttype.value}" for ttype in T]


# ----- RunResult ----- #
@dataclass
class RunResult:
    """
    Series of one run, one row per period from t=0 to the horizon
    """
    seed: int
    run_index: int
    series: pd.DataFrame
    transactions: pd.DataFrame
    config_digest: str = ""

    def __len__(self) -> int:
        return len(self.series)

    def column(self, name: str) -> np.ndarray:
        return self.series[name].to_numpy(dtype=float)

    @property
    def quota_value(self) -> np.ndarray:
        return self.column("quota_value")

    @property
    def total_assets(self) -> np.ndarray:
        return self.column("total_assets")

    @property
    def loan_book_value(self) -> np.ndarray:
        return self.column("loan_book_value")

    @property
    def one_period_return(self) -> np.ndarray:
        """
        Returns of periods 1..horizon
        """
        return self.column("one_period_return")[1:]

    @property
    def horizon(self) -> int:
        return len(self.series) - 1

    def to_frame(self) -> pd.DataFrame:
        """
        Series table with the run index as first column
        """
        frame = self.series.copy()
        frame.insert(0, "run", self.run_index)
        return frame[config.SERIES_COLUMNS + VOLUME_COLUMNS]

    def transactions_frame(self) -> pd.DataFrame:
        frame = self.transactions.copy()
        frame.insert(0, "run", self.run_index)
        return frame[config.TRANSACTION_COLUMNS]
