# -*- coding: utf-8 -*-
import sys
sys.path.insert(0,'..')

import os
import io
import logging
import json
import numpy as np
import pytest

from sedatom.exceptions import ConfigurationError
from sedatom.physmodel import RunConfig, ANGSTROM
from sedatom.cli import CommandSpec, parse_and_validate, dispatch, main, EXIT_OK, EXIT_VALIDATION, EXIT_IO
from sedatom.cli.commands import dump_modes
from sedatom.ensemble.io import checkpoint_path


def test_parse_and_validate(tmp_path):
    spec, config = parse_and_validate(["run"])
    assert isinstance(spec, CommandSpec)
    assert spec.subcommand == "run"
    assert spec.config_path is None
    assert spec.worker_count == 1
    assert config == RunConfig()

    spec, config = parse_and_validate(["run", "--seed", "42", "--runs", "3", "--t-end", "1e-13", "--snapshots", "5e-14,1e-13",
                                       "--field-mode", "full", "--set", "integrator.rel_tol=1e-10", "--workers", "2", "--fresh"])
    assert config.seed == 42
    assert config.campaign_seeds() == [42, 43, 44]
    assert config.t_end == 1e-13
    assert config.snapshot_times == [5e-14, 1e-13]
    assert config.field_mode == "full"
    assert config.integrator.rel_tol == 1e-10
    assert spec.worker_count == 2
    assert spec.options['fresh'] is True
    assert "integrator.rel_tol=1e-10" in spec.overrides

    spec, config = parse_and_validate(["run", "--seeds", "9,4,6"])
    assert config.campaign_seeds() == [9, 4, 6]

    # File values are overridden by flags, flags by --set
    path = str(tmp_path / "config.json")
    with open(path, 'w') as f:
        json.dump({"seed": 5, "window_fraction": 0.05, "histogram": {"r_max": 4e-8}}, f)
    spec, config = parse_and_validate(["run", "--config", path, "--seed", "6", "--set", "seed=7"])
    assert spec.config_path == path
    assert config.seed == 7
    assert config.window_fraction == 0.05
    assert config.histogram.r_max == 4e-8
    assert config.histogram.bin_width == RunConfig().histogram.bin_width

    out_dir = str(tmp_path / "out" / "nested")
    spec, _ = parse_and_validate(["dump-modes", "--out", out_dir, "--n-lo", "3", "--n-hi", "4"])
    assert os.path.isdir(out_dir)
    assert spec.options['n_lo'] == 3 and spec.options['n_hi'] == 4

    with pytest.raises(ConfigurationError) as ex:
        parse_and_validate(["run", "--set", "window_fraction=1.5"])
    assert ex.value.key == "window_fraction"
    with pytest.raises(ConfigurationError) as ex:
        parse_and_validate(["run", "--set", "integrator.step=1"])
    assert ex.value.key == "integrator.step"
    with pytest.raises(ConfigurationError) as ex:
        parse_and_validate(["run", "--workers", "0"])
    assert ex.value.key == "workers"
    with pytest.raises(OSError):
        parse_and_validate(["run", "--config", str(tmp_path / "missing.json")])
    with pytest.raises(SystemExit):
        parse_and_validate(["run", "--unknown"])
    with pytest.raises(SystemExit):
        parse_and_validate(["teleport"])


def test_exit_codes(tmp_path):
    assert main(["run", "--set", "window_fraction=1.5"]) == EXIT_VALIDATION
    assert main(["run", "--seeds", "1,1"]) == EXIT_VALIDATION
    assert main(["run", "--set", "window_fraction=abc", "-q"]) == EXIT_VALIDATION
    assert main(["run", "--set", "constants.e=abc", "-q"]) == EXIT_VALIDATION
    assert main(["kepler", "--set", "integrator.max_rejects=2.5", "-q"]) == EXIT_VALIDATION
    assert main(["run", "--set", "radiation_reaction=maybe", "-q"]) == EXIT_VALIDATION
    assert main(["run", "--config", str(tmp_path / "missing.json")]) == EXIT_IO
    assert main(["dump-modes", "--n-lo", "5", "--n-hi", "2"]) == EXIT_VALIDATION

    path = str(tmp_path / "broken.json")
    with open(path, 'w') as f:
        f.write("{seed: 1")
    assert main(["run", "--config", path]) == EXIT_VALIDATION


def test_dump_modes(tmp_path):
    out_1, out_2 = str(tmp_path / "a"), str(tmp_path / "b")
    assert main(["dump-modes", "--seed", "11", "--n-lo", "1", "--n-hi", "3000", "--out", out_1, "-q"]) == EXIT_OK
    assert main(["dump-modes", "--seed", "11", "--n-lo", "1", "--n-hi", "3000", "--out", out_2, "-q"]) == EXIT_OK

    with open(os.path.join(out_1, "modes_11.csv")) as f:
        content = f.read()
    with open(os.path.join(out_2, "modes_11.csv")) as f:
        assert f.read() == content

    lines = content.splitlines()
    assert lines[0] == "n,direction,polarization,omega,A,B"
    assert len(lines) == 1 + 4 * 3000
    assert lines[1].startswith("1,+z,x,")
    assert lines[4].startswith("1,-z,y,")
    assert lines[5].startswith("2,+z,x,")

    # A sub-range reproduces the same rows
    f = io.StringIO()
    config = RunConfig(seed=11)
    dump_modes(f, 11, 2048, 2050, config.cavity, config.constants)
    rows = f.getvalue().splitlines()[1:]
    expected = lines[1 + 4 * 2047:1 + 4 * 2050]
    for row, row_expected in zip(rows, expected):
        values = row.split(",")
        values_expected = row_expected.split(",")
        assert values[:3] == values_expected[:3]
        assert np.allclose([float(v) for v in values[3:]], [float(v) for v in values_expected[3:]], rtol=1e-12, atol=0.)
    assert len(rows) == 12

    # Different seeds give different tables
    out_3 = str(tmp_path / "c")
    assert main(["dump-modes", "--seed", "12", "--n-hi", "10", "--out", out_3, "-q"]) == EXIT_OK
    with open(os.path.join(out_3, "modes_12.csv")) as f:
        assert f.read().splitlines()[1] != lines[1]


def test_dispatch(tmp_path):
    out_dir = str(tmp_path)
    spec, config = parse_and_validate(["run", "--out", out_dir, "--seeds", "1,2", "--t-end", "1e-16", "--snapshots", "1e-16",
                                       "--set", "field_amplitude_scale=0", "--set", "radiation_reaction=false"])
    assert dispatch(spec, config) == EXIT_OK
    with open(os.path.join(out_dir, "manifest.json")) as f:
        manifest = json.load(f)
    assert manifest['command'] == "run"
    assert manifest['seeds'] == [1, 2]
    assert "radiation_reaction=false" in manifest['overrides']
    assert RunConfig.from_dict(manifest['config']) == config
    assert os.path.exists(os.path.join(out_dir, "snapshots", "snapshot_0.csv"))


def test_run_continues_from_checkpoints(tmp_path, caplog):
    caplog.set_level(logging.INFO)
    out_dir = str(tmp_path)
    args = ["run", "--out", out_dir, "--seeds", "3", "--t-end", "1e-16", "--snapshots", "1e-16",
            "--set", "field_amplitude_scale=0", "--set", "radiation_reaction=false", "--set", "checkpoint_interval=5e-17"]
    assert dispatch(*parse_and_validate(args)) == EXIT_OK
    assert os.path.exists(checkpoint_path(out_dir, 3))
    assert not any("resuming" in r.getMessage() for r in caplog.records)
    with open(os.path.join(out_dir, "metrics.json")) as f:
        first = json.load(f)

    # A second invocation picks up the checkpoint without any flag
    caplog.clear()
    assert dispatch(*parse_and_validate(args)) == EXIT_OK
    assert sum("resuming" in r.getMessage() for r in caplog.records) == 1
    with open(os.path.join(out_dir, "metrics.json")) as f:
        second = json.load(f)
    assert np.isclose(second['snapshots'][0]['l1_to_qm'], first['snapshots'][0]['l1_to_qm'], rtol=1e-9)
    assert second['runs'][0]['n_accepted'] == first['runs'][0]['n_accepted']

    # --fresh ignores it
    caplog.clear()
    assert dispatch(*parse_and_validate(args + ["--fresh"])) == EXIT_OK
    assert not any("resuming" in r.getMessage() for r in caplog.records)
