#-*- coding: utf-8 -*-

"""
RECEIVABLES POOL libs
____________________________________________________________________________________________________
engine package
version : 1.0
____________________________________________________________________________________________________
Scenario documents, period phases and the run scheduler
____________________________________________________________________________________________________
(c) Lafiteau Franck
"""

from . import (
    registry,
    scenario,
    result,
    phases,
    engine
)

from .scenario import ScenarioConfig
from .result import RunResult
from .engine import SimulationState, RandomStreams, step, run, run_batch, derive_seed
