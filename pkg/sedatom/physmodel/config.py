# -*- coding: utf-8 -*-
import json
from dataclasses import dataclass, field, fields, asdict
import numpy as np

from ..exceptions import ConfigurationError
from .constants import PhysicalConstants, ANGSTROM, bohr_radius, circular_frequency, circular_speed


FIELD_MODES = ("window", "full")
TABLEAUS = ("cash-karp", "dormand-prince")

DEFAULT_SNAPSHOT_TIMES = [1.417e-12, 4.500e-12, 5.705e-12, 7.252e-12]


def _is_number(value):
    return isinstance(value, (int, float, np.integer, np.floating)) and not isinstance(value, (bool, np.bool_))


def coerce_value(key, value, kind):
    """Converts a configuration value to the declared type `kind` of its field.

    Raises
    ------
    ConfigurationError
        If `value` can not represent a `kind` - the exception names `key`.
    """
    if kind is float and _is_number(value):
        return float(value)
    if kind is int and _is_number(value) and float(value).is_integer():
        return int(value)
    if kind is bool and isinstance(value, (bool, np.bool_)):
        return bool(value)
    if kind is str and isinstance(value, str):
        return value
    if kind is list and isinstance(value, (list, tuple)) and all(_is_number(v) for v in value):
        return list(value)

    raise ConfigurationError(key, f"has to be of type {kind.__name__} but not {value!r}")


def _from_dict(cls, d, prefix):
    """Builds the dataclass `cls` from a dictionary, rejecting unknown keys and values of the wrong type."""
    if not isinstance(d, dict):
        raise ConfigurationError(prefix.rstrip('.'), f"has to be a JSON object but not {type(d).__name__}")

    kinds = {f.name: f.type for f in fields(cls)}
    for key in d.keys():
        if key not in kinds:
            raise ConfigurationError(prefix + key, "unknown key")

    return cls(**{key: coerce_value(prefix + key, value, kinds[key]) for key, value in d.items()})


@dataclass
class CavityConfig:
    """Dimensions of the rectilinear region that quantizes the zero-point field.

    Parameters
    ----------
    L_x, L_y, L_z : `float`
        Edge lengths (cm). Only waves along the long edge `L_z` are kept.
    r_cutoff : `float`
        Smallest resolved circular-orbit radius (cm); its circular frequency is the largest mode frequency.
    """
    L_x: float = 37.4 * ANGSTROM
    L_y: float = 37.4 * ANGSTROM
    L_z: float = 40850000. * ANGSTROM
    r_cutoff: float = 0.1 * ANGSTROM

    @property
    def volume(self):
        return self.L_x * self.L_y * self.L_z

    def omega_min(self, constants):
        """Lowest nonzero lattice frequency 2 pi c / L_z (rad/s)."""
        return 2. * np.pi * constants.c / self.L_z

    def omega_max(self, constants):
        """Largest retained frequency, the circular frequency at `r_cutoff` (rad/s)."""
        return circular_frequency(self.r_cutoff, constants)

    def n_max(self, constants):
        """Number of lattice frequencies n omega_min that do not exceed `omega_max`."""
        # Relative slack so that a cutoff placed exactly on a lattice point keeps it
        return int(np.floor(self.omega_max(constants) / self.omega_min(constants) * (1. + 1e-12)))

    def validate(self, constants):
        for key in ("L_x", "L_y", "L_z", "r_cutoff"):
            value = getattr(self, key)
            if not value > 0.:
                raise ConfigurationError(f"cavity.{key}", f"has to be strictly positive but not {value}")
        if self.L_z < self.L_x or self.L_z < self.L_y:
            raise ConfigurationError("cavity.L_z", "has to be at least as large as 'L_x' and 'L_y'")
        if self.omega_max(constants) < self.omega_min(constants) * (1. - 1e-12):
            raise ConfigurationError("cavity.r_cutoff", "the circular frequency at 'r_cutoff' lies below the lowest cavity frequency - no modes would be left")


@dataclass
class IntegratorConfig:
    """Error tolerances and step-size bounds of the adaptive Runge-Kutta integrator.

    Parameters
    ----------
    rel_tol : `float`
        Relative tolerance.
    abs_tol_pos : `float`
        Absolute tolerance of the position components (cm).
    abs_tol_vel : `float`
        Absolute tolerance of the velocity components (cm/s).
    dt_init, dt_min, dt_max : `float`
        Initial, smallest and largest step size (s).
    safety : `float`
        Safety factor of the step-size controller, 0 < safety < 1.
    max_rejects : `int`
        Number of consecutive rejected steps after which the trajectory is declared stiff.
    max_growth : `float`
        Largest factor by which a step may grow.
    """
    rel_tol: float = 1e-9
    abs_tol_pos: float = 1e-18
    abs_tol_vel: float = 1e-9 * circular_speed(bohr_radius())
    dt_init: float = 1e-18
    dt_min: float = 1e-24
    dt_max: float = 1e-16
    safety: float = 0.9
    max_rejects: int = 50
    max_growth: float = 5.

    @property
    def abs_tol(self):
        """Absolute tolerances of the phase-space vector (x, y, vx, vy)."""
        return np.array([self.abs_tol_pos, self.abs_tol_pos, self.abs_tol_vel, self.abs_tol_vel])

    def scaled(self, factor):
        """Copy with all tolerances multiplied by `factor`."""
        d = asdict(self)
        for key in ("rel_tol", "abs_tol_pos", "abs_tol_vel"):
            d[key] *= factor
        return IntegratorConfig(**d)

    def validate(self):
        for key in ("rel_tol", "abs_tol_pos", "abs_tol_vel"):
            if not getattr(self, key) > 0.:
                raise ConfigurationError(f"integrator.{key}", "has to be strictly positive")
        if not 0. < self.dt_min <= self.dt_init <= self.dt_max:
            raise ConfigurationError("integrator.dt_init", "step bounds have to satisfy 0 < dt_min <= dt_init <= dt_max")
        if not 0. < self.safety < 1.:
            raise ConfigurationError("integrator.safety", f"has to lie in (0, 1) but not {self.safety}")
        if int(self.max_rejects) < 1:
            raise ConfigurationError("integrator.max_rejects", "has to be at least 1")
        if not self.max_growth > 1.:
            raise ConfigurationError("integrator.max_growth", "has to be larger than 1")


@dataclass
class HistogramConfig:
    """Binning of the radial histograms: bin width and largest recorded radius (cm)."""
    bin_width: float = 0.01 * ANGSTROM
    r_max: float = 5. * ANGSTROM

    def validate(self):
        if not self.bin_width > 0.:
            raise ConfigurationError("histogram.bin_width", "has to be strictly positive")
        if not self.r_max > self.bin_width:
            raise ConfigurationError("histogram.r_max", "has to be larger than 'bin_width'")


@dataclass
class RunConfig:
    """Complete description of a simulation campaign.

    All lengths are given in cm and all times in s. The defaults reproduce the published setup: a 37.4 A x 37.4 A x 40,850,000 A cavity,
    a +-3% window, start on the circular orbit at 0.53 A and snapshots at the four published times.

    Parameters
    ----------
    constants : :class:`sedatom.physmodel.PhysicalConstants`
    cavity : :class:`CavityConfig`
    integrator : :class:`IntegratorConfig`
    histogram : :class:`HistogramConfig`
    window_fraction : `float`
        Half width f of the radius window, 0 <= f < 1.
    seed : `int`
        Seed of the field realization of a single run; campaigns without explicit `seeds` use `seed`, `seed`+1, ...
    seeds : `list(int)`, optional
        Explicit seed list of a campaign.
    runs : `int`
        Number of runs of a campaign if `seeds` is not given.
    r0 : `float`
        Initial radius.
    t_end : `float`
        Simulation horizon.
    snapshot_times : `list(float)`
        Times at which merged densities are reported.
    r_min_guard, r_max_guard : `float`
        Guard radii; leaving [r_min_guard, r_max_guard] terminates a run with a collapse or ionization event.
    field_mode : `str`
        "window" sums the modes of the radius window only, "full" sums all modes.
    field_amplitude_scale : `float`
        Factor applied to every field amplitude; 0 switches the zero-point field off.
    radiation_reaction : `bool`
        Whether the radiation reaction term is included.
    tableau : `str`
        Embedded Runge-Kutta pair, "cash-karp" or "dormand-prince".
    trajectory_stride : `int`
        Every `trajectory_stride`-th accepted step is written to the radius trace of a run.
    trace : `bool`
        Writes every accepted step to a per-run trace file.
    checkpoint_interval : `float`
        Simulated time between two checkpoints of a run; 0 disables checkpointing.
    progress_interval : `float`
        Wall-clock seconds between two progress log lines of a run.
    """
    constants: PhysicalConstants = field(default_factory=PhysicalConstants)
    cavity: CavityConfig = field(default_factory=CavityConfig)
    integrator: IntegratorConfig = field(default_factory=IntegratorConfig)
    histogram: HistogramConfig = field(default_factory=HistogramConfig)
    window_fraction: float = 0.03
    seed: int = 1
    seeds: list = None
    runs: int = 11
    r0: float = 0.53 * ANGSTROM
    t_end: float = DEFAULT_SNAPSHOT_TIMES[-1]
    snapshot_times: list = field(default_factory=lambda: list(DEFAULT_SNAPSHOT_TIMES))
    r_min_guard: float = 0.05 * ANGSTROM
    r_max_guard: float = 500. * ANGSTROM
    field_mode: str = "window"
    field_amplitude_scale: float = 1.
    radiation_reaction: bool = True
    tableau: str = "cash-karp"
    trajectory_stride: int = 100
    trace: bool = False
    checkpoint_interval: float = 0.
    progress_interval: float = 30.

    def campaign_seeds(self):
        """Seed list of a campaign."""
        if self.seeds is not None:
            return [int(s) for s in self.seeds]
        return [int(self.seed) + i for i in range(int(self.runs))]

    def validate(self):
        """Checks all invariants.

        Raises
        ------
        ConfigurationError
            If any value is invalid - the exception names the offending key.
        """
        self.cavity.validate(self.constants)
        self.integrator.validate()
        self.histogram.validate()

        if not 0. <= self.window_fraction < 1.:
            raise ConfigurationError("window_fraction", f"has to lie in [0, 1) but not {self.window_fraction}")
        if not 0. < self.r_min_guard < self.r0 < self.r_max_guard:
            raise ConfigurationError("r0", "guards and initial radius have to satisfy 0 < r_min_guard < r0 < r_max_guard")
        if self.t_end < 0.:
            raise ConfigurationError("t_end", "has to be non-negative")
        if list(self.snapshot_times) != sorted(self.snapshot_times):
            raise ConfigurationError("snapshot_times", "has to be sorted in ascending order")
        if len(self.snapshot_times) > 0 and (self.snapshot_times[0] < 0. or self.snapshot_times[-1] > self.t_end):
            raise ConfigurationError("snapshot_times", "all snapshot times have to lie in [0, t_end]")
        if self.field_mode not in FIELD_MODES:
            raise ConfigurationError("field_mode", f"has to be one of {FIELD_MODES} but not '{self.field_mode}'")
        if self.tableau not in TABLEAUS:
            raise ConfigurationError("tableau", f"has to be one of {TABLEAUS} but not '{self.tableau}'")
        if self.field_amplitude_scale < 0.:
            raise ConfigurationError("field_amplitude_scale", "has to be non-negative")
        if int(self.runs) < 1:
            raise ConfigurationError("runs", "has to be at least 1")
        if int(self.trajectory_stride) < 1:
            raise ConfigurationError("trajectory_stride", "has to be at least 1")
        if self.checkpoint_interval < 0.:
            raise ConfigurationError("checkpoint_interval", "has to be non-negative")

        seeds = self.campaign_seeds()
        if len(set(seeds)) != len(seeds):
            raise ConfigurationError("seeds", "seeds have to be distinct")
        for s in seeds + [int(self.seed)]:
            if not 0 <= s < 2**64:
                raise ConfigurationError("seeds" if self.seeds is not None else "seed", f"seed {s} is not a 64-bit unsigned integer")

        return self

    @classmethod
    def from_dict(cls, d):
        """Builds a configuration from a (nested) dictionary - omitted keys take their defaults."""
        if not isinstance(d, dict):
            raise ConfigurationError("config", f"has to be a JSON object but not {type(d).__name__}")
        kinds = {f.name: f.type for f in fields(cls)}
        for key in d.keys():
            if key not in kinds:
                raise ConfigurationError(key, "unknown key")

        values = {}
        for key, value in d.items():
            kind = kinds[key]
            if kind in (PhysicalConstants, CavityConfig, IntegratorConfig, HistogramConfig):
                values[key] = _from_dict(kind, value, key + ".")
            elif key == "seeds" and value is None:
                values[key] = None
            else:
                values[key] = coerce_value(key, value, kind)

        return cls(**values)

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_json(cls, path):
        with open(path) as f:
            return cls.from_dict(json.load(f))


def parse_override_value(text):
    """Interprets the value of a `key=value` override as JSON, falling back to a plain string."""
    try:
        return json.loads(text)
    except ValueError:
        return text


def apply_overrides(d, overrides):
    """Applies `key=value` overrides (dotted keys address nested records) to a configuration dictionary.

    Parameters
    ----------
    d : `dict`
        Configuration dictionary - modified in place.
    overrides : `list(str)`
        Overrides, e.g. `["seed=42", "integrator.rel_tol=1e-10"]`.

    Returns
    -------
    `dict`
        The updated dictionary.

    Raises
    ------
    ConfigurationError
        If an override is not of the form `key=value`.
    """
    for item in overrides:
        if '=' not in item:
            raise ConfigurationError(item, "overrides have to be of the form key=value")
        key, value = item.split('=', 1)
        path = key.strip().split('.')

        node = d
        for part in path[:-1]:
            node = node.setdefault(part, {})
            if not isinstance(node, dict):
                raise ConfigurationError(key, f"'{part}' is not a nested record")
        node[path[-1]] = parse_override_value(value.strip())

    return d
