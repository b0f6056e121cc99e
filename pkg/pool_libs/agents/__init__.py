#-*- coding: utf-8 -*-

"""
RECEIVABLES POOL libs
____________________________________________________________________________________________________
agents package
version : 1.0
____________________________________________________________________________________________________
Borrowers, guarantors and investors of the platform
____________________________________________________________________________________________________
(c) Lafiteau Franck
"""

from . import (
    components,
    policies,
    population
)

from .components import AgentComponent, GuarantorSpec, BorrowerSpec, InvestorSpec, InvestorState
from .policies import guarantor_offer, investor_decision
from .population import spawn_guarantor, spawn_borrowers, spawn_investor, spawn_seed_investor, investor_arrivals
