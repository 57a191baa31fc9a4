# -*- coding: utf-8 -*-
from dataclasses import dataclass, asdict
import numpy as np

from ..exceptions import ConfigurationError


ANGSTROM = 1e-8     # cm


@dataclass(frozen=True)
class PhysicalConstants:
    """Physical constants in CGS-Gaussian units.

    Parameters
    ----------
    e : `float`
        Magnitude of the elementary charge (statcoulomb).
    m : `float`
        Electron rest mass (gram).
    c : `float`
        Speed of light (cm/s).
    hbar : `float`
        Reduced Planck constant (erg s).

    Raises
    ------
    ConfigurationError
        If any of the constants is not strictly positive.
    """
    e: float = 4.80320e-10
    m: float = 9.10938e-28
    c: float = 2.99792e10
    hbar: float = 1.05457e-27

    def __post_init__(self):
        for key, value in asdict(self).items():
            if not np.isfinite(value) or value <= 0.:
                raise ConfigurationError(f"constants.{key}", f"has to be strictly positive but not {value}")

    @classmethod
    def from_dict(cls, d):
        values = {}
        for key, value in d.items():
            try:
                values[key] = float(value)
            except (TypeError, ValueError):
                raise ConfigurationError(f"constants.{key}", f"has to be a number but not {value!r}")
        return cls(**values)

    def to_dict(self):
        return asdict(self)


DEFAULT_CONSTANTS = PhysicalConstants()


def _check_radius(r):
    if not r > 0.:
        raise ValueError(f"'r' has to be strictly positive but not {r}")


def bohr_radius(constants=DEFAULT_CONSTANTS):
    """Computes the Bohr radius hbar^2/(m e^2).

    Parameters
    ----------
    constants : :class:`PhysicalConstants`, optional
        The default is :data:`DEFAULT_CONSTANTS`.

    Returns
    -------
    `float`
        The Bohr radius (cm).
    """
    return constants.hbar**2 / (constants.m * constants.e**2)


def circular_frequency(r, constants=DEFAULT_CONSTANTS):
    """Angular frequency of a classical electron on a circular Coulomb orbit of radius `r`.

    Parameters
    ----------
    r : `float`
        Orbit radius (cm).
    constants : :class:`PhysicalConstants`, optional
        The default is :data:`DEFAULT_CONSTANTS`.

    Returns
    -------
    `float`
        e/(m r^3)^(1/2) in rad/s.

    Raises
    ------
    ValueError
        If `r` is not strictly positive.
    """
    _check_radius(r)
    return np.sqrt(constants.e**2 / (constants.m * r**3))


def circular_speed(r, constants=DEFAULT_CONSTANTS):
    """Speed of a circular Coulomb orbit of radius `r` (cm/s).

    Raises
    ------
    ValueError
        If `r` is not strictly positive.
    """
    _check_radius(r)
    return np.sqrt(constants.e**2 / (constants.m * r))


def circular_radius(omega, constants=DEFAULT_CONSTANTS):
    """Inverse of :func:`circular_frequency`: the radius (cm) of the circular orbit with angular frequency `omega`."""
    if not omega > 0.:
        raise ValueError(f"'omega' has to be strictly positive but not {omega}")
    return np.cbrt(constants.e**2 / (constants.m * omega**2))


def decay_rate_r3(constants=DEFAULT_CONSTANTS):
    """Rate d(r^3)/dt (cm^3/s) of a circular orbit drained by radiation reaction alone.

    Balancing the Larmor power against the orbital energy -e^2/(2r) gives d(r^3)/dt = -4e^4/(m^2 c^3).
    """
    return -4. * constants.e**4 / (constants.m**2 * constants.c**3)


def decay_time(r_start, r_end=0., constants=DEFAULT_CONSTANTS):
    """Time (s) a radiation-reaction-only circular orbit needs to shrink from `r_start` to `r_end`."""
    return (r_start**3 - r_end**3) / -decay_rate_r3(constants)


def orbit_diagnostics(position, velocity, constants=DEFAULT_CONSTANTS):
    """Computes the Kepler invariants of a planar state.

    Parameters
    ----------
    position : `numpy.ndarray`
        Planar position (cm).
    velocity : `numpy.ndarray`
        Planar velocity (cm/s).
    constants : :class:`PhysicalConstants`, optional
        The default is :data:`DEFAULT_CONSTANTS`.

    Returns
    -------
    `dict`
        Orbital energy 'energy' (erg), angular momentum 'angular_momentum' (erg s) and osculating eccentricity 'eccentricity'.
    """
    r = np.hypot(position[0], position[1])
    energy = .5 * constants.m * (velocity[0]**2 + velocity[1]**2) - constants.e**2 / r
    angular_momentum = constants.m * (position[0] * velocity[1] - position[1] * velocity[0])
    ecc2 = 1. + 2. * energy * angular_momentum**2 / (constants.m * constants.e**4)

    return {'energy': energy, 'angular_momentum': angular_momentum, 'eccentricity': np.sqrt(max(ecc2, 0.))}
