# -*- coding: utf-8 -*-
import os
import sys
import json
import platform
from datetime import datetime, timezone
import numpy as np
import scipy

from .. import __version__
from ..dynamics import ParticleState
from ..zpfield import plane_wave_count
from .histogram import RadialHistogram


CSV_FORMAT = "%.17g"


def write_csv(path, columns, header):
    """Writes equally long columns as CSV with a header row and full double precision.

    Parameters
    ----------
    path : `str`
        Output file.
    columns : `list(numpy.ndarray)`
        The columns.
    header : `list(str)`
        Column names.
    """
    data = np.column_stack([np.asarray(c, dtype=np.float64) for c in columns]) if len(columns[0]) > 0 else np.zeros((0, len(columns)))
    np.savetxt(path, data, delimiter=",", header=",".join(header), comments="", fmt=CSV_FORMAT)


def write_density_csv(path, density, reference=None):
    """Writes a density as (r_center, P) or, if the reference density values are given, as (r_center, P_sim, P_qm)."""
    if reference is None:
        write_csv(path, [density.r_center, density.P], ["r_center", "P"])
    else:
        write_csv(path, [density.r_center, density.P, reference], ["r_center", "P_sim", "P_qm"])


def write_trajectory_csv(path, rows):
    """Writes the sampled radius trace - rows of (t, r, eccentricity)."""
    rows = np.asarray(rows, dtype=np.float64).reshape(-1, 3)
    write_csv(path, [rows[:, 0], rows[:, 1], rows[:, 2]], ["t", "r", "eccentricity"])


def _to_jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_to_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, np.generic):
        return obj.item()
    return obj


def write_json(path, obj):
    with open(path, 'w') as f:
        json.dump(_to_jsonable(obj), f, indent=2)


def build_manifest(config, command, defaults_used, config_path=None, overrides=None, extra=None):
    """Collects everything needed to reproduce a run.

    Parameters
    ----------
    config : :class:`sedatom.physmodel.RunConfig`
        The effective configuration.
    command : `str`
        The subcommand.
    defaults_used : `bool`
        True if no configuration file was given.
    config_path : `str`, optional
    overrides : `list(str)`, optional
    extra : `dict`, optional
        Additional entries.

    Returns
    -------
    `dict`
    """
    manifest = {
        'sedatom_version': __version__,
        'command': command,
        'created': datetime.now(timezone.utc).isoformat(),
        'config_source': "defaults" if defaults_used else config_path,
        'overrides': list(overrides or []),
        'config': config.to_dict(),
        'seeds': config.campaign_seeds(),
        'cavity_modes': {'n_max': config.cavity.n_max(config.constants),
                         'plane_waves': plane_wave_count(config.cavity, False, config.constants),
                         'plane_waves_by_polarization': plane_wave_count(config.cavity, True, config.constants)},
        'tableau': config.tableau,
        'initial_condition': "circular orbit, counterclockwise, position (r0, 0), velocity (0, circular_speed(r0))",
        'amplitude_generator': "Philox 4x64 keyed by seed, counter 2(n-1), Box-Muller",
        'python': sys.version.split()[0],
        'platform': platform.platform(),
        'numpy': np.__version__,
        'scipy': scipy.__version__,
    }
    if extra is not None:
        manifest.update(extra)

    return manifest


def checkpoint_path(out_dir, seed):
    return os.path.join(out_dir, "checkpoints", f"run_{seed}.npz")


def save_checkpoint(path, state, histogram, dt, snapshots, trajectory, counters, first_superluminal=None):
    """Serializes the state of a running trajectory.

    Parameters
    ----------
    path : `str`
        Output file (numpy `.npz`).
    state : :class:`sedatom.dynamics.ParticleState`
    histogram : :class:`sedatom.ensemble.RadialHistogram`
    dt : `float`
        Proposed next step size of the integrator.
    snapshots : `list(RadialHistogram)`
        Histograms of the snapshots that were already reached.
    trajectory : `list`
        Radius trace rows (t, r, eccentricity).
    counters : `tuple(int)`
        Step counters of the integrator (accepted, rejected and superluminal steps).
    first_superluminal : `tuple(float)`, optional
        Time and speed of the first step that reached the speed of light.

        The default is None.
    """
    os.makedirs(os.path.dirname(path), exist_ok=True)
    tmp = path + ".tmp.npz"
    np.savez(tmp,
             state=np.concatenate((state.vector, [state.t])),
             weights=histogram.weights, binning=np.array([histogram.bin_width, histogram.r_max, histogram.total_time]),
             dt=np.array([dt]),
             snapshot_weights=np.array([h.weights for h in snapshots]).reshape(len(snapshots), histogram.n_bins),
             snapshot_times=np.array([h.total_time for h in snapshots]),
             trajectory=np.asarray(trajectory, dtype=np.float64).reshape(-1, 3),
             counters=np.array(counters, dtype=np.int64),
             first_superluminal=np.array(first_superluminal if first_superluminal is not None else [np.nan, np.nan], dtype=np.float64))
    os.replace(tmp, path)


def load_checkpoint(path):
    """Inverse of :func:`save_checkpoint`.

    Returns
    -------
    `dict`
        Keys 'state', 'histogram', 'dt', 'snapshots', 'trajectory', 'counters' and 'first_superluminal'.
    """
    with np.load(path) as data:
        s = data['state']
        bin_width, r_max, total_time = data['binning']

        histogram = RadialHistogram(bin_width, r_max)
        histogram.weights = data['weights'].copy()
        histogram.total_time = float(total_time)

        snapshots = []
        for weights, total in zip(data['snapshot_weights'], data['snapshot_times']):
            h = RadialHistogram(bin_width, r_max)
            h.weights = weights.copy()
            h.total_time = float(total)
            snapshots.append(h)

        first_superluminal = None
        if 'first_superluminal' in data.files and not np.isnan(data['first_superluminal'][0]):
            first_superluminal = tuple(float(v) for v in data['first_superluminal'])

        return {'state': ParticleState.from_vector(s[:4], float(s[4])), 'histogram': histogram, 'dt': float(data['dt'][0]),
                'snapshots': snapshots, 'trajectory': [tuple(row) for row in data['trajectory']],
                'counters': tuple(int(c) for c in data['counters']), 'first_superluminal': first_superluminal}
