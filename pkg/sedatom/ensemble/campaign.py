# -*- coding: utf-8 -*-
import os
import time
import logging
from dataclasses import dataclass
from functools import partial
from concurrent.futures import ProcessPoolExecutor
import numpy as np

from ..exceptions import ConfigurationError, SimulationEvent
from ..physmodel.constants import bohr_radius
from ..physmodel.reference import qm_radial_density, qm_radial_cdf
from ..zpfield import FieldRealization
from ..dynamics import ParticleState, EquationOfMotion
from ..integrator import prepare_integrator
from .histogram import RadialHistogram, merge_all, l1_distance
from .observer import HistogramObserver, TrajectoryRecorder, TraceWriter, ProgressReporter, ObserverChain
from .io import checkpoint_path, save_checkpoint, load_checkpoint, write_density_csv, write_trajectory_csv, write_json


@dataclass
class RunResult:
    """Outcome of a single trajectory.

    Attributes
    ----------
    seed : `int`
    snapshots : `list(RadialHistogram)`
        Histogram at every snapshot time - runs that terminated earlier repeat their final histogram.
    snapshot_times_reached : `list(float)`
        Time actually reached at every snapshot, min(snapshot time, end time).
    histogram : :class:`RadialHistogram`
        Histogram at the end of the run.
    end_time : `float`
        Time at which the run ended (s).
    event : `dict`
        Terminating event ('kind', 't', 'r', 'message') or None.
    speed_event : `dict`
        Accepted steps that reached the speed of light ('count' and time 't' and speed 'speed' of the first one) or None.
    final_state : :class:`sedatom.dynamics.ParticleState`
    trajectory : `numpy.ndarray`
        Sampled radius trace, rows of (t, r, eccentricity).
    n_accepted, n_rejected : `int`
        Step counts.
    wall_time : `float`
        Wall-clock time (s) of this process' share of the run.
    """
    seed: int
    snapshots: list
    snapshot_times_reached: list
    histogram: RadialHistogram
    end_time: float
    event: dict
    final_state: ParticleState
    trajectory: np.ndarray
    n_accepted: int
    n_rejected: int
    wall_time: float
    speed_event: dict = None

    def summary(self, constants):
        """Per-run metrics - the own final density is compared with the reference density as well."""
        d = {'seed': self.seed, 'end_time': self.end_time, 'event': self.event, 'n_accepted': self.n_accepted,
             'n_rejected': self.n_rejected, 'wall_time': self.wall_time, 'final_radius': self.final_state.radius,
             'speed_event': self.speed_event}
        if not self.histogram.empty:
            density = self.histogram.normalize()
            d['l1_to_qm'] = l1_distance(density, qm_radial_density, bohr_radius(constants))
            d['peak_radius'] = density.peak_radius
        if len(self.trajectory) > 0:
            d['max_eccentricity'] = float(np.max(self.trajectory[:, 2]))
        return d


@dataclass
class SnapshotReport:
    """Merged density of all runs at one snapshot time.

    Attributes
    ----------
    t : `float`
        Scheduled snapshot time (s).
    t_avg : `float`
        Mean time actually reached by the runs (s).
    density : :class:`sedatom.ensemble.RadialDensity`
    l1_to_qm : `float`
        l1 distance to the ground-state density, in [0, 2].
    run_count : `int`
        Number of runs that contributed.
    qm_mass_in_range : `float`
        Ground-state probability inside the recorded radial range, the value `density.mass` approaches for a matching ensemble.
    """
    t: float
    t_avg: float
    density: object
    l1_to_qm: float
    run_count: int
    qm_mass_in_range: float = None

    def to_dict(self):
        return {'t': self.t, 't_avg': self.t_avg, 'l1_to_qm': self.l1_to_qm, 'run_count': self.run_count,
                'peak_radius': self.density.peak_radius, 'mass_in_range': self.density.mass,
                'qm_mass_in_range': self.qm_mass_in_range}


@dataclass
class CampaignResult:
    runs: list
    reports: list


def _stop_times(config, t_start, checkpointing=False):
    stops = set(config.snapshot_times) | {config.t_end}
    if checkpointing:
        stops |= set(np.arange(1, int(config.t_end / config.checkpoint_interval) + 1) * config.checkpoint_interval)
    return sorted(t for t in stops if t_start < t <= config.t_end)


def run_trajectory(config, seed, out_dir=None, resume=False):
    """Evolves a single electron with its own field realization.

    The electron starts on the counterclockwise circular orbit at (r0, 0). The residence time is accumulated from the start,
    a copy of the histogram is kept at every snapshot time.

    Parameters
    ----------
    config : :class:`sedatom.physmodel.RunConfig`
        Run configuration.
    seed : `int`
        Seed of the field realization.
    out_dir : `str`, optional
        Directory for checkpoints and trace files.

        If `out_dir` is None, nothing is written.

        The default is None.
    resume : `bool`, optional
        Continue from the newest checkpoint of this seed if one exists.

        The default is False.

    Returns
    -------
    :class:`RunResult`
        Terminating events (collapse, ionization, stiffness) are recorded in the result and do not raise.
    """
    wall_start = time.monotonic()
    constants = config.constants

    realization = FieldRealization(seed, config.cavity, constants, config.field_amplitude_scale)
    eom = EquationOfMotion(realization, config)
    integrator = prepare_integrator(config.tableau, config.integrator, guards=(config.r_min_guard, config.r_max_guard),
                                    speed_limit=constants.c)

    state = ParticleState.circular(config.r0, constants)
    histogram = RadialHistogram.from_config(config.histogram)
    snapshots = []
    trajectory = []

    ckpt = checkpoint_path(out_dir, seed) if out_dir is not None and config.checkpoint_interval > 0. else None
    resumed = False
    if resume and ckpt is not None and os.path.exists(ckpt):
        data = load_checkpoint(ckpt)
        state, histogram, snapshots, trajectory = data['state'], data['histogram'], data['snapshots'], data['trajectory']
        integrator.dt = data['dt']
        integrator.n_accepted, integrator.n_rejected, integrator.n_superluminal = (list(data['counters']) + [0])[:3]
        integrator.first_superluminal = data['first_superluminal']
        resumed = True
        logging.info(f"run {seed}: resuming from checkpoint at t={state.t:.6e} s")

    trace = None
    if config.trace and out_dir is not None:
        trace = TraceWriter(os.path.join(out_dir, f"run_{seed}_trace.csv"), append=resumed)
    recorder = TrajectoryRecorder(config.trajectory_stride, constants, rows=trajectory)
    observer = ObserverChain([HistogramObserver(histogram), recorder, trace,
                              ProgressReporter(f"run {seed}", max(config.t_end, 1e-300), config.progress_interval)])

    snapshot_times = list(config.snapshot_times)
    event = None
    try:
        while len(snapshots) < len(snapshot_times) and snapshot_times[len(snapshots)] <= state.t:
            snapshots.append(histogram.copy())

        for stop in _stop_times(config, state.t, ckpt is not None):
            state = integrator.advance(state, stop, eom, observer)
            while len(snapshots) < len(snapshot_times) and snapshot_times[len(snapshots)] <= state.t:
                snapshots.append(histogram.copy())
            if ckpt is not None and stop < config.t_end:
                save_checkpoint(ckpt, state, histogram, integrator.dt, snapshots, recorder.rows,
                                (integrator.n_accepted, integrator.n_rejected, integrator.n_superluminal), integrator.first_superluminal)
    except SimulationEvent as ex:
        logging.warning(f"run {seed}: {ex}")
        state = ex.state
        event = {'kind': ex.kind, 't': ex.t, 'r': ex.state.radius, 'message': str(ex)}
    finally:
        if trace is not None:
            trace.close()

    end_time = event['t'] if event is not None else state.t
    while len(snapshots) < len(snapshot_times):
        snapshots.append(histogram.copy())

    if event is None and len(recorder.rows) > 0 and recorder.rows[-1][0] != state.t:
        recorder.record(state)

    speed_event = None
    if integrator.n_superluminal > 0:
        t_first, v_first = integrator.first_superluminal
        speed_event = {'count': integrator.n_superluminal, 't': t_first, 'speed': v_first}
        logging.warning(f"run {seed}: {integrator.n_superluminal} steps at or above the speed of light, the first at t={t_first:.6e} s")

    return RunResult(seed=int(seed), snapshots=snapshots, snapshot_times_reached=[min(t, end_time) for t in snapshot_times],
                     histogram=histogram, end_time=end_time, event=event, final_state=state,
                     trajectory=np.asarray(recorder.rows, dtype=np.float64).reshape(-1, 3),
                     n_accepted=integrator.n_accepted, n_rejected=integrator.n_rejected, wall_time=time.monotonic() - wall_start,
                     speed_event=speed_event)


def build_snapshot_reports(config, runs):
    """Merges the per-run histograms at every snapshot time.

    Runs are merged in ascending seed order, so the reports do not depend on the order of the seed list.
    Snapshots without any accumulated time are skipped.
    """
    a_B = bohr_radius(config.constants)
    ordered = sorted(runs, key=lambda r: r.seed)
    reports = []

    for j, t in enumerate(config.snapshot_times):
        merged = merge_all([r.snapshots[j] for r in ordered])
        if merged.empty:
            logging.info(f"snapshot at t={t:.6e} s is empty - skipped")
            continue

        density = merged.normalize()
        reports.append(SnapshotReport(t=t, t_avg=float(np.mean([r.snapshot_times_reached[j] for r in ordered])),
                                      density=density, l1_to_qm=l1_distance(density, qm_radial_density, a_B),
                                      run_count=sum(1 for r in ordered if not r.snapshots[j].empty),
                                      qm_mass_in_range=float(qm_radial_cdf(len(density.P) * density.bin_width, a_B))))

    return reports


def run_campaign(config, seeds=None, workers=1, out_dir=None, resume=False):
    """Runs one trajectory per seed and merges the radial histograms at the snapshot times.

    Parameters
    ----------
    config : :class:`sedatom.physmodel.RunConfig`
        Run configuration.
    seeds : `list(int)`, optional
        Seeds of the runs.

        If `seeds` is None, :meth:`sedatom.physmodel.RunConfig.campaign_seeds` is used.

        The default is None.
    workers : `int`, optional
        Number of worker processes. Does not change any numerical result.

        The default is 1.
    out_dir : `str`, optional
        Directory for checkpoints and trace files.

        The default is None.
    resume : `bool`, optional
        Resume every run from its newest checkpoint.

        The default is False.

    Returns
    -------
    :class:`CampaignResult`

    Raises
    ------
    ConfigurationError
        If the seeds are not distinct.
    """
    seeds = [int(s) for s in seeds] if seeds is not None else config.campaign_seeds()
    if len(set(seeds)) != len(seeds):
        raise ConfigurationError("seeds", "seeds have to be distinct")

    worker = partial(run_trajectory, config, out_dir=out_dir, resume=resume)
    if workers > 1 and len(seeds) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            runs = list(pool.map(worker, seeds))
    else:
        runs = [worker(s) for s in seeds]

    for r in runs:
        if r.event is not None:
            logging.info(f"run {r.seed} terminated by {r.event['kind']} at t={r.end_time:.6e} s")

    return CampaignResult(runs=runs, reports=build_snapshot_reports(config, runs))


def write_campaign(out_dir, config, result, manifest):
    """Writes all outputs of a campaign.

    Layout::

        manifest.json
        metrics.json
        snapshots/snapshot_<j>.csv      r_center, P_sim, P_qm
        runs/run_<seed>_trajectory.csv  t, r, eccentricity
        runs/run_<seed>_histogram.csv   r_center, P
    """
    a_B = bohr_radius(config.constants)
    os.makedirs(os.path.join(out_dir, "snapshots"), exist_ok=True)
    os.makedirs(os.path.join(out_dir, "runs"), exist_ok=True)

    for j, report in enumerate(result.reports):
        write_density_csv(os.path.join(out_dir, "snapshots", f"snapshot_{j}.csv"), report.density, qm_radial_density(report.density.r_center, a_B))

    for run in result.runs:
        write_trajectory_csv(os.path.join(out_dir, "runs", f"run_{run.seed}_trajectory.csv"), run.trajectory)
        if not run.histogram.empty:
            write_density_csv(os.path.join(out_dir, "runs", f"run_{run.seed}_histogram.csv"), run.histogram.normalize())

    write_json(os.path.join(out_dir, "metrics.json"), {
        'snapshots': [r.to_dict() for r in result.reports],
        'runs': [r.summary(config.constants) for r in result.runs]})
    write_json(os.path.join(out_dir, "manifest.json"), manifest)
