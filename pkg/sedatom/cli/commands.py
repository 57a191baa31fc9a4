# -*- coding: utf-8 -*-
import os
import sys
import csv
import logging
from dataclasses import replace
import numpy as np
from scipy import stats

from ..exceptions import ConfigurationError, CollapseEvent
from ..physmodel import ANGSTROM, bohr_radius, circular_frequency, decay_rate_r3, decay_time
from ..zpfield import COMPONENTS, FieldRealization, amplitude_table, amplitude_std
from ..dynamics import ParticleState, EquationOfMotion
from ..integrator import prepare_integrator
from ..ensemble import Observer, run_campaign, write_campaign, write_json, build_manifest
from .bench import bench_window_vs_full
from .main import EXIT_OK, EXIT_CHECK_FAILED


DECAY_TOLERANCE = 0.01
DECAY_TERMINAL_TIME = (1.4e-11, 1.7e-11)
KEPLER_TOLERANCE = 1e-8
VARIANCE_RATIO_RANGE = (0.97, 1.03)
BENCH_DEVIATION = 0.01
BENCH_SPEEDUP = 10.


def _manifest(spec, config, extra=None):
    return build_manifest(config, spec.subcommand, spec.config_path is None, spec.config_path, spec.overrides, extra)


def _write_report(spec, config, name, report):
    if spec.out_dir is None:
        return
    write_json(os.path.join(spec.out_dir, name), report)
    write_json(os.path.join(spec.out_dir, "manifest.json"), _manifest(spec, config, {'options': spec.options}))


def _check(passed, description):
    if passed:
        logging.info(f"check passed: {description}")
    else:
        logging.error(f"check failed: {description}")
    return bool(passed)


def _without_field(config, radiation_reaction):
    config = replace(config, field_amplitude_scale=0., radiation_reaction=radiation_reaction)
    return config, EquationOfMotion(FieldRealization(config.seed, config.cavity, config.constants, amplitude_scale=0.), config)


class _SampleRecorder(Observer):
    """Records f(state) at the first state and at every `stride`-th accepted step."""
    def __init__(self, f, stride=1, **kwds):
        self.f = f
        self.stride = stride
        self.count = 0
        self.t = []
        self.values = []

        super().__init__(**kwds)

    def observe(self, before, after, dt):
        if self.count == 0:
            self.t.append(before.t)
            self.values.append(self.f(before))
        self.count += 1
        if self.count % self.stride == 0:
            self.t.append(after.t)
            self.values.append(self.f(after))


def decay_check(config, r_stop=0.12 * ANGSTROM, stride=100):
    """Integrates a circular orbit that starts at the Bohr radius with radiation reaction but without zero-point field.

    Parameters
    ----------
    config : :class:`sedatom.physmodel.RunConfig`
        Provides constants, integrator settings and the upper guard.
    r_stop : `float`, optional
        Radius (cm) at which the run is stopped.

        The default is 0.12 A.
    stride : `int`, optional
        Every `stride`-th accepted step enters the fit of r^3(t).

        The default is 100.

    Returns
    -------
    `dict`
        Fitted and predicted slope of r^3(t), their relative difference, and the measured and predicted time at which `r_stop` is reached.
        The measured time is None if `r_stop` was not reached within twice the predicted time of a full collapse.
    """
    constants = config.constants
    config, eom = _without_field(config, radiation_reaction=True)
    a_B = bohr_radius(constants)

    integrator = prepare_integrator(config.tableau, config.integrator, guards=(r_stop, config.r_max_guard))
    recorder = _SampleRecorder(lambda s: s.radius**3, stride)

    t_terminal = None
    try:
        integrator.advance(ParticleState.circular(a_B, constants), 2. * decay_time(a_B, 0., constants), eom, recorder)
    except CollapseEvent as ex:
        t_terminal = ex.t

    fit = stats.linregress(recorder.t, recorder.values)
    slope = decay_rate_r3(constants)

    return {'slope_fitted': float(fit.slope), 'slope_predicted': slope, 'slope_relative_error': float(abs(fit.slope / slope - 1.)),
            'r_value': float(fit.rvalue), 't_terminal': t_terminal, 't_terminal_predicted': decay_time(a_B, r_stop, constants),
            'r_stop': r_stop, 'n_accepted': integrator.n_accepted, 'n_rejected': integrator.n_rejected}


def kepler_check(config, orbits=100., rel_tol=1e-10):
    """Integrates the circular orbit at r0 without field and without radiation reaction.

    The tolerances of `config` are scaled so that the relative tolerance equals `rel_tol`.

    Returns
    -------
    `dict`
        Largest relative drift of the energy and of the angular momentum over all accepted steps.
    """
    constants = config.constants
    config, eom = _without_field(config, radiation_reaction=False)
    integrator = prepare_integrator(config.tableau, config.integrator.scaled(rel_tol / config.integrator.rel_tol))

    state = ParticleState.circular(config.r0, constants)
    initial = state.diagnostics(constants)
    drift = {'energy': 0., 'angular_momentum': 0.}

    def observer(before, after, dt):
        d = after.diagnostics(constants)
        for key in drift:
            drift[key] = max(drift[key], abs(d[key] / initial[key] - 1.))

    period = 2. * np.pi / circular_frequency(config.r0, constants)
    final = integrator.advance(state, orbits * period, eom, observer)

    return {'orbits': orbits, 'period': period, 'rel_tol': rel_tol, 'max_energy_drift': drift['energy'],
            'max_angular_momentum_drift': drift['angular_momentum'], 'final_radius': final.radius,
            'n_accepted': integrator.n_accepted, 'n_rejected': integrator.n_rejected}


def field_statistics(config, n_modes=100000, n_start=1):
    """Sample statistics of the normalized coefficients A/sigma and B/sigma of `n_modes` consecutive modes.

    Returns
    -------
    `dict`
        Per coefficient: sample mean, variance ratio to the prescribed variance, standard error of the mean and
        the p-value of a Kolmogorov-Smirnov test against the standard normal distribution.
    """
    n_hi = n_start + n_modes - 1
    omega, A, B = amplitude_table(config.seed, n_start, n_hi, config.cavity, config.constants, use_cache=False)
    sigma = amplitude_std(omega, config.constants)[:, np.newaxis]

    report = {'seed': config.seed, 'n_lo': n_start, 'n_hi': n_hi, 'omega_lo': float(omega[0]), 'omega_hi': float(omega[-1])}
    for name, values in (("A", A), ("B", B)):
        z = (values / sigma).ravel()
        report[name] = {'samples': int(z.size), 'mean': float(np.mean(z)), 'variance_ratio': float(np.var(z)),
                        'mean_stderr': float(np.sqrt(np.var(z) / z.size)), 'ks_pvalue': float(stats.kstest(z, 'norm').pvalue)}
    report['correlation_AB'] = float(stats.pearsonr((A / sigma).ravel(), (B / sigma).ravel())[0])

    return report


def cmd_run(spec, config):
    result = run_campaign(config, workers=spec.worker_count, out_dir=spec.out_dir, resume=not spec.options.get('fresh', False))

    for report in result.reports:
        print(f"t={report.t:.4e} s  t_avg={report.t_avg:.4e} s  runs={report.run_count}  "
              f"l1_to_qm={report.l1_to_qm:.4f}  peak={report.density.peak_radius / ANGSTROM:.3f} A")
    terminated = [r for r in result.runs if r.event is not None]
    if len(terminated) > 0:
        logging.warning(f"{len(terminated)} of {len(result.runs)} runs terminated early")

    if spec.out_dir is not None:
        write_campaign(spec.out_dir, config, result, _manifest(spec, config, {'workers': spec.worker_count}))

    return EXIT_OK


def cmd_decay(spec, config):
    report = decay_check(config, r_stop=spec.options.get('r_stop', 0.12 * ANGSTROM))
    _write_report(spec, config, "decay.json", report)

    lo, hi = DECAY_TERMINAL_TIME
    passed = _check(report['slope_relative_error'] < DECAY_TOLERANCE,
                    f"slope of r^3(t) {report['slope_fitted']:.6e} vs {report['slope_predicted']:.6e} cm^3/s")
    passed &= _check(report['t_terminal'] is not None and lo <= report['t_terminal'] <= hi,
                     f"terminal time {report['t_terminal']} s (predicted {report['t_terminal_predicted']:.4e} s)")

    return EXIT_OK if passed else EXIT_CHECK_FAILED


def cmd_kepler(spec, config):
    report = kepler_check(config, orbits=spec.options.get('orbits', 100.), rel_tol=spec.options.get('rel_tol', 1e-10))
    _write_report(spec, config, "kepler.json", report)

    passed = _check(report['max_energy_drift'] < KEPLER_TOLERANCE, f"energy drift {report['max_energy_drift']:.3e}")
    passed &= _check(report['max_angular_momentum_drift'] < KEPLER_TOLERANCE, f"angular momentum drift {report['max_angular_momentum_drift']:.3e}")

    return EXIT_OK if passed else EXIT_CHECK_FAILED


def cmd_fieldstats(spec, config):
    report = field_statistics(config, n_modes=spec.options.get('modes', 100000), n_start=spec.options.get('n_start', 1))
    _write_report(spec, config, "fieldstats.json", report)

    lo, hi = VARIANCE_RATIO_RANGE
    passed = True
    for name in ("A", "B"):
        r = report[name]
        passed &= _check(lo <= r['variance_ratio'] <= hi, f"variance ratio of {name} {r['variance_ratio']:.5f}")
        passed &= _check(abs(r['mean']) <= 3. * r['mean_stderr'], f"mean of {name} {r['mean']:.3e} (3 sigma = {3. * r['mean_stderr']:.3e})")
        logging.info(f"Kolmogorov-Smirnov p-value of {name}: {r['ks_pvalue']:.3f}")

    return EXIT_OK if passed else EXIT_CHECK_FAILED


def bench_passed(report):
    """Acceptance of a window-vs-full comparison: the largest radial deviation |r_window - r_full| stays below 1% of r0."""
    return report['relative_radial_deviation'] < BENCH_DEVIATION


def cmd_bench(spec, config):
    config = replace(config, cavity=replace(config.cavity, L_z=spec.options.get('L_z', 4085. * ANGSTROM)))
    config.validate()

    report = bench_window_vs_full(config, horizon=spec.options.get('horizon', 1e-14), samples=spec.options.get('samples', 100))
    _write_report(spec, config, "bench.json", report)

    print(f"modes in window at r0={report['window_modes_at_r0']}/{report['n_max']}  "
          f"max radial deviation={report['relative_radial_deviation']:.3e} r0  "
          f"max position deviation={report['relative_position_deviation']:.3e} r0  "
          f"speedup={report['speedup']:.1f} ({report['wall_time_full']:.2f} s / {report['wall_time_window']:.2f} s)")
    if report['speedup'] < BENCH_SPEEDUP:
        logging.warning(f"speedup {report['speedup']:.1f} is below {BENCH_SPEEDUP:.0f} - the per-step overhead dominates the mode summation")

    passed = _check(bench_passed(report), f"largest radial deviation {report['relative_radial_deviation']:.3e} r0")

    return EXIT_OK if passed else EXIT_CHECK_FAILED


def dump_modes(f, seed, n_lo, n_hi, cavity, constants):
    """Writes one CSV row (n, direction, polarization, omega, A, B) per plane wave and polarization."""
    writer = csv.writer(f, lineterminator="\n")
    writer.writerow(["n", "direction", "polarization", "omega", "A", "B"])

    omega, A, B = amplitude_table(seed, n_lo, n_hi, cavity, constants, use_cache=False)
    for i, n in enumerate(range(n_lo, n_hi + 1)):
        for k, (direction, polarization) in enumerate(COMPONENTS):
            writer.writerow([n, str(direction), str(polarization), f"{omega[i]:.17g}", f"{A[i, k]:.17g}", f"{B[i, k]:.17g}"])


def cmd_dump_modes(spec, config):
    n_lo, n_hi = spec.options.get('n_lo', 1), spec.options.get('n_hi', 1000)
    n_max = config.cavity.n_max(config.constants)
    if not 1 <= n_lo <= n_hi <= n_max:
        raise ConfigurationError("n_lo", f"mode range has to satisfy 1 <= n_lo <= n_hi <= {n_max} but is [{n_lo}, {n_hi}]")

    if spec.out_dir is None:
        dump_modes(sys.stdout, config.seed, n_lo, n_hi, config.cavity, config.constants)
    else:
        with open(os.path.join(spec.out_dir, f"modes_{config.seed}.csv"), 'w', newline='') as f:
            dump_modes(f, config.seed, n_lo, n_hi, config.cavity, config.constants)

    return EXIT_OK


COMMANDS = {
    "run": cmd_run,
    "decay": cmd_decay,
    "kepler": cmd_kepler,
    "fieldstats": cmd_fieldstats,
    "bench": cmd_bench,
    "dump-modes": cmd_dump_modes,
}
