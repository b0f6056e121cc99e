#-*- coding: utf-8 -*-

"""
RECEIVABLES POOL pool_libs
____________________________________________________________________________________________________
pool_libs
version : 1.0
____________________________________________________________________________________________________
This Package contains all libs of the receivables anticipation pool simulator
____________________________________________________________________________________________________
(c) Lafiteau Franck
"""

__version__: str = "1.0"

from . import config

from .logger import Logger, LoggerInterrupt

# create main logger of the system
logger: Logger = Logger()

from . import (
    header,
    pricing,
    credit_model,
    demand,
    agents,
    ledger,
    engine,
    metrics,
    optimizer
)
