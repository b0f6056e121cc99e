#-*- coding: utf-8 -*-

"""
RECEIVABLES POOL libs
____________________________________________________________________________________________________
ledger package
version : 1.0
____________________________________________________________________________________________________
Loan contracts and the liquidity pool ledger
____________________________________________________________________________________________________
(c) Lafiteau Franck
"""

from . import (
    contract,
    pool
)

from .contract import LoanContract
from .pool import PoolLedger, Transaction, PendingSettlement, PeriodSummary
