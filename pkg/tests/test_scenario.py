# -*- coding: utf-8 -*-

"""
Tests of scenario documents
"""

# import external modules
from glob import glob
from os.path import join, dirname
import json
import numpy as np
import pytest

from pool_libs.header import BorrowerMode, ScenarioError
from pool_libs.engine.scenario import Distribution, ScenarioConfig

SCENARIO_FOLDER = join(dirname(dirname(__file__)), "scenarios")


def test_defaults():
    scenario = ScenarioConfig()
    assert scenario.horizon == 36
    assert scenario.periods_per_year == 12
    assert scenario.borrowers.mode is BorrowerMode.CONSTANT
    assert scenario.rates.r == pytest.approx(0.00797414, abs=1e-8)
    assert scenario.demand_curve.phi == -10.0


def test_bare_numbers_are_constant_distributions(rng):
    scenario = ScenarioConfig.from_dict({"borrowers": {"size": 3, "schedule_total": 2.5, "n_installments": 4}})
    assert scenario.borrowers.schedule_total == Distribution(kind="constant", value=2.5)
    assert scenario.borrowers.schedule_total.sample(rng) == 2.5


@pytest.mark.parametrize("data,minimum", [
    ({"kind": "uniform", "low": 1.0, "high": 3.0}, 1.0),
    ({"kind": "choice", "values": [3, 6, 12]}, 3.0),
    ({"kind": "poisson", "lam": 2.0}, 0.0),
])
def test_distribution_samples_stay_in_support(data, minimum, rng):
    dist = Distribution.model_validate(data)
    draws = np.array([dist.sample(rng) for _ in range(500)])
    assert dist.minimum == minimum
    assert np.all(draws >= minimum)
    if dist.kind == "choice":
        assert set(draws) <= {3.0, 6.0, 12.0}


@pytest.mark.parametrize("data", [
    {"kind": "uniform", "low": 3.0, "high": 1.0},
    {"kind": "uniform"},
    {"kind": "choice", "values": []},
    {"kind": "poisson"},
    {"kind": "normal", "value": 1.0},
])
def test_invalid_distributions(data):
    with pytest.raises(ValueError):
        Distribution.model_validate(data)


@pytest.mark.parametrize("data,field", [
    ({"horizon": -1}, "horizon"),
    ({"demand": {"phi": 0.0}}, "demand.phi"),
    ({"demand": {"phi": 2.0}}, "demand.phi"),
    ({"unknown_key": 1}, "unknown_key"),
    ({"borrowers": {"schedule_total": 0.0}}, "borrowers"),
    ({"guarantors": {"frequency": 1.5}}, "guarantors.frequency"),
    ({"investors": {"loss_withdraw_rate": {"kind": "uniform", "low": 0.5, "high": 2.0}}}, "investors"),
    ({"r": -0.01}, "r"),
])
def test_invalid_scenarios_name_the_field(data, field):
    with pytest.raises(ScenarioError) as error:
        ScenarioConfig.from_dict(data)
    assert field in str(error.value)


def test_every_error_is_listed():
    with pytest.raises(ScenarioError) as error:
        ScenarioConfig.from_dict({"horizon": -1, "r": -1.0})
    assert "horizon" in str(error.value) and "r:" in str(error.value)


def test_digest_is_stable_and_tracks_changes():
    scenario = ScenarioConfig.from_dict({"name": "digest", "s": 0.1})
    assert scenario.digest() == ScenarioConfig.from_dict({"s": 0.1, "name": "digest"}).digest()
    other = scenario.with_spread(0.2)
    assert other.s == 0.2
    assert scenario.s == 0.1
    assert other.digest() != scenario.digest()


def test_load_from_file(tmp_path):
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps({"name": "from_file", "horizon": 6}), encoding="utf-8")
    scenario = ScenarioConfig.load(str(path))
    assert scenario.name == "from_file"
    assert scenario.horizon == 6


@pytest.mark.parametrize("content", ["{not json", "[1, 2]"])
def test_load_rejects_malformed_documents(tmp_path, content):
    path = tmp_path / "broken.json"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(ScenarioError):
        ScenarioConfig.load(str(path))


def test_load_missing_file(tmp_path):
    with pytest.raises(ScenarioError):
        ScenarioConfig.load(str(tmp_path / "missing.json"))


@pytest.mark.parametrize("path", sorted(glob(join(SCENARIO_FOLDER, "*.json"))))
def test_shipped_scenarios_load(path):
    scenario = ScenarioConfig.load(path)
    assert scenario.horizon > 0
