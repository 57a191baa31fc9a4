# -*- coding: utf-8 -*-
import sys
sys.path.insert(0,'..')

import json
import numpy as np
import pytest

from sedatom.exceptions import ConfigurationError
from sedatom.physmodel import RunConfig, CavityConfig, IntegratorConfig, HistogramConfig, ANGSTROM, DEFAULT_CONSTANTS, \
    DEFAULT_SNAPSHOT_TIMES, apply_overrides, parse_override_value


def test_cavity():
    cavity = CavityConfig()
    assert abs(cavity.volume / (37.4**2 * 40850000. * ANGSTROM**3) - 1.) < 1e-12
    assert abs(cavity.omega_min(DEFAULT_CONSTANTS) / 4.611e11 - 1.) < 1e-3
    assert abs(cavity.omega_max(DEFAULT_CONSTANTS) / 5.03e17 - 1.) < 1e-2
    assert 1.08e6 < cavity.n_max(DEFAULT_CONSTANTS) < 1.10e6

    reduced = CavityConfig(L_z=4085. * ANGSTROM)
    assert 100 < reduced.n_max(DEFAULT_CONSTANTS) < 120

    with pytest.raises(ConfigurationError) as ex:
        CavityConfig(L_x=-1.).validate(DEFAULT_CONSTANTS)
    assert ex.value.key == "cavity.L_x"
    with pytest.raises(ConfigurationError):
        CavityConfig(r_cutoff=1e3).validate(DEFAULT_CONSTANTS)


def test_defaults():
    config = RunConfig().validate()
    assert config.window_fraction == 0.03
    assert config.snapshot_times == DEFAULT_SNAPSHOT_TIMES
    assert config.t_end == DEFAULT_SNAPSHOT_TIMES[-1]
    assert config.campaign_seeds() == list(range(1, 12))
    assert RunConfig(seeds=[7, 3]).campaign_seeds() == [7, 3]

    assert config.integrator.abs_tol.shape == (4,)
    scaled = config.integrator.scaled(0.1)
    assert abs(scaled.rel_tol - 1e-10) < 1e-24
    assert scaled.dt_max == config.integrator.dt_max

    # Round trip through the dictionary form
    assert RunConfig.from_dict(json.loads(json.dumps(config.to_dict()))) == config


def test_validation():
    invalid = [
        ({"window_fraction": 1.5}, "window_fraction"),
        ({"window_fraction": -0.1}, "window_fraction"),
        ({"r0": 1e-12}, "r0"),
        ({"t_end": -1.}, "t_end"),
        ({"snapshot_times": [2e-12, 1e-12]}, "snapshot_times"),
        ({"snapshot_times": [1e-11]}, "snapshot_times"),
        ({"field_mode": "partial"}, "field_mode"),
        ({"tableau": "euler"}, "tableau"),
        ({"seeds": [1, 1]}, "seeds"),
        ({"seed": -1}, "seed"),
        ({"runs": 0}, "runs"),
        ({"integrator": {"rel_tol": 0.}}, "integrator.rel_tol"),
        ({"integrator": {"dt_min": 1e-10}}, "integrator.dt_init"),
        ({"integrator": {"safety": 1.5}}, "integrator.safety"),
        ({"histogram": {"bin_width": 0.}}, "histogram.bin_width"),
    ]
    for d, key in invalid:
        with pytest.raises(ConfigurationError) as ex:
            RunConfig.from_dict(d).validate()
        assert ex.value.key == key
        assert key in str(ex.value)

    with pytest.raises(ConfigurationError) as ex:
        RunConfig.from_dict({"window_size": 0.1})
    assert ex.value.key == "window_size"
    with pytest.raises(ConfigurationError) as ex:
        RunConfig.from_dict({"integrator": {"tolerance": 0.1}})
    assert ex.value.key == "integrator.tolerance"
    with pytest.raises(ConfigurationError):
        RunConfig.from_dict([1, 2])

    # Values of the wrong type name their key
    wrong_type = [
        ({"window_fraction": "abc"}, "window_fraction"),
        ({"constants": {"e": "abc"}}, "constants.e"),
        ({"runs": 2.5}, "runs"),
        ({"radiation_reaction": "yes"}, "radiation_reaction"),
        ({"snapshot_times": ["soon"]}, "snapshot_times"),
        ({"integrator": {"rel_tol": None}}, "integrator.rel_tol"),
        ({"field_mode": 1}, "field_mode"),
    ]
    for d, key in wrong_type:
        with pytest.raises(ConfigurationError) as ex:
            RunConfig.from_dict(d)
        assert ex.value.key == key

    config = RunConfig.from_dict({"runs": 3., "t_end": 1, "seeds": None})
    assert config.runs == 3 and isinstance(config.runs, int)
    assert isinstance(config.t_end, float)

    with pytest.raises(ConfigurationError) as ex:
        DEFAULT_CONSTANTS.from_dict({"m": "heavy"})
    assert ex.value.key == "constants.m"

    # Configuration errors are value errors
    with pytest.raises(ValueError):
        RunConfig(window_fraction=2.).validate()


def test_overrides():
    assert parse_override_value("42") == 42
    assert parse_override_value("1e-10") == 1e-10
    assert parse_override_value("[1, 2]") == [1, 2]
    assert parse_override_value("true") is True
    assert parse_override_value("dormand-prince") == "dormand-prince"

    d = apply_overrides({"seed": 3, "integrator": {"rel_tol": 1e-8}},
                        ["seed=42", "integrator.abs_tol_pos=1e-20", "histogram.bin_width=2e-10", "tableau=dormand-prince"])
    assert d == {"seed": 42, "integrator": {"rel_tol": 1e-8, "abs_tol_pos": 1e-20}, "histogram": {"bin_width": 2e-10}, "tableau": "dormand-prince"}

    config = RunConfig.from_dict(d).validate()
    assert config.seed == 42
    assert config.integrator.rel_tol == 1e-8
    assert config.integrator.abs_tol_pos == 1e-20
    assert config.integrator.dt_max == IntegratorConfig().dt_max
    assert config.histogram == HistogramConfig(bin_width=2e-10)
    assert config.tableau == "dormand-prince"

    # Later overrides win
    assert apply_overrides({}, ["seed=1", "seed=2"]) == {"seed": 2}

    with pytest.raises(ConfigurationError):
        apply_overrides({}, ["seed"])
    with pytest.raises(ConfigurationError):
        apply_overrides({"seed": 1}, ["seed.x=2"])
