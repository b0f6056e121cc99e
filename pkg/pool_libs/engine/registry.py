# -*- coding: utf-8 -*-

"""engine.registry
___________________________________________________________________________________________________
Registry and decorator for simulation phases.
___________________________________________________________________________________________________
(c) Lafiteau Franck
"""

from __future__ import annotations
from typing import Callable, TYPE_CHECKING, TypeAlias

if TYPE_CHECKING:
    from .engine import SimulationState

PhaseFunc: TypeAlias = Callable[["SimulationState", int], None]

PHASE_REGISTRY: dict[str, PhaseFunc] = {}


def phase(name: str) -> Callable[[PhaseFunc], PhaseFunc]:
    """Decorator to register a phase under the name used in config.PHASE_PRIORITY."""
    def decorator(func: PhaseFunc) -> PhaseFunc:
        if name in PHASE_REGISTRY:
            raise ValueError(f"Phase [{name}] registered twice")
        PHASE_REGISTRY[name] = func
        return func
    return decorator
