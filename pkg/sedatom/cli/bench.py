# -*- coding: utf-8 -*-
import time
import logging
from dataclasses import replace
import numpy as np

from ..zpfield import FieldRealization, window_indices
from ..dynamics import ParticleState, EquationOfMotion
from ..integrator import prepare_integrator


def _sampled_trajectory(config, times):
    realization = FieldRealization(config.seed, config.cavity, config.constants, config.field_amplitude_scale)
    eom = EquationOfMotion(realization, config)
    integrator = prepare_integrator(config.tableau, config.integrator, guards=(config.r_min_guard, config.r_max_guard))

    state = ParticleState.circular(config.r0, config.constants)
    positions = []
    start = time.perf_counter()
    for t in times:
        state = integrator.advance(state, t, eom)
        positions.append(state.position)

    return np.array(positions), time.perf_counter() - start, integrator.n_accepted


def bench_window_vs_full(config, horizon=1e-14, samples=100):
    """Integrates the same realization once with the radius window and once with all modes.

    Both trajectories are compared at `samples` equally spaced times, which also serve as common step boundaries.
    The cavity of `config` should be small enough for the full summation to be affordable.

    Parameters
    ----------
    config : :class:`sedatom.physmodel.RunConfig`
        Run configuration - `seed`, `r0` and `window_fraction` are used, `field_mode` is ignored.
    horizon : `float`, optional
        Simulated time (s).

        The default is 1e-14.
    samples : `int`, optional
        Number of comparison times.

        The default is 100.

    Returns
    -------
    `dict`
        Wall-clock times, speedup (full / window), number of modes summed at r0, and the largest radial and position
        deviations - the latter both in cm and relative to r0.
    """
    times = np.linspace(0., horizon, samples + 1)[1:]

    window_config = replace(config, field_mode="window")
    full_config = replace(config, field_mode="full")

    logging.info(f"bench: window summation over {horizon:.3e} s")
    z_window, wall_window, steps_window = _sampled_trajectory(window_config, times)
    logging.info(f"bench: full summation over {horizon:.3e} s")
    z_full, wall_full, steps_full = _sampled_trajectory(full_config, times)

    position_deviation = float(np.max(np.linalg.norm(z_full - z_window, axis=1)))
    radial_deviation = float(np.max(np.abs(np.linalg.norm(z_full, axis=1) - np.linalg.norm(z_window, axis=1))))

    realization = FieldRealization(config.seed, config.cavity, config.constants)
    window_modes = len(window_indices(config.r0, config.window_fraction, realization))

    return {
        'horizon': horizon,
        'samples': samples,
        'n_max': realization.n_max,
        'window_modes_at_r0': window_modes,
        'wall_time_window': wall_window,
        'wall_time_full': wall_full,
        'speedup': wall_full / wall_window if wall_window > 0. else float('inf'),
        'steps_window': steps_window,
        'steps_full': steps_full,
        'max_position_deviation': position_deviation,
        'max_radial_deviation': radial_deviation,
        'relative_position_deviation': position_deviation / config.r0,
        'relative_radial_deviation': radial_deviation / config.r0,
    }
