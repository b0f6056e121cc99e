# -*- coding: utf-8 -*-

"""
Shared fixtures of the pool_libs test suite
"""

# import external modules
from os.path import dirname, abspath
import sys
import numpy as np
import pytest

ROOT = dirname(dirname(abspath(__file__)))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

from pool_libs.engine.scenario import ScenarioConfig


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)


@pytest.fixture
def market():
    """
    Factory of small riskless lending markets accepting every offer
    """
    def build(**overrides) -> ScenarioConfig:
        document = {
            "name": "test_market",
            "horizon": 12,
            "r": 0.10,
            "s": 0.10,
            "defaults": {"fixed": 0.0},
            "demand": {"always_accept": True},
            "borrowers": {"mode": "constant", "size": 20, "schedule_total": 1.0, "n_installments": 6}
        }
        for key, value in overrides.items():
            if isinstance(value, dict) and isinstance(document.get(key), dict):
                document[key] = {**document[key], **value}
            else:
                document[key] = value
        return ScenarioConfig.from_dict(document)
    return build
