# -*- coding: utf-8 -*-
from enum import IntEnum
from dataclasses import dataclass
import numpy as np

from ..physmodel.constants import DEFAULT_CONSTANTS


class Direction(IntEnum):
    """Propagation direction of a plane wave along the long cavity axis."""
    PLUS_Z = +1
    MINUS_Z = -1

    def __str__(self):
        return "+z" if self is Direction.PLUS_Z else "-z"


class Polarization(IntEnum):
    """Polarization of a plane wave - both lie in the x-y plane."""
    X = 0
    Y = 1

    def __str__(self):
        return self.name.lower()


# Order of the (direction, polarization) components inside every amplitude table
COMPONENTS = [(Direction.PLUS_Z, Polarization.X), (Direction.PLUS_Z, Polarization.Y),
              (Direction.MINUS_Z, Polarization.X), (Direction.MINUS_Z, Polarization.Y)]


def component_index(direction, polarization):
    return COMPONENTS.index((Direction(direction), Polarization(polarization)))


def propagation_vector(direction):
    return np.array([0., 0., float(direction)])


def polarization_vector(polarization):
    e = np.zeros(3)
    e[int(polarization)] = 1.
    return e


# Unit vectors multiplying the electric (eps) and magnetic (k x eps) terms - one row per component
ELECTRIC_VECTORS = np.array([polarization_vector(p) for _, p in COMPONENTS])
MAGNETIC_VECTORS = np.array([np.cross(propagation_vector(d), polarization_vector(p)) for d, p in COMPONENTS])


@dataclass(frozen=True)
class ModeId:
    """Identifies a single plane wave of the quasi one-dimensional cavity.

    Parameters
    ----------
    n : `int`
        Mode integer - the wave has angular frequency n 2 pi c / L_z.
    direction : :class:`Direction`
    polarization : :class:`Polarization`
    """
    n: int
    direction: Direction = Direction.PLUS_Z
    polarization: Polarization = Polarization.X

    def __post_init__(self):
        if int(self.n) < 1:
            raise ValueError(f"Mode integer 'n' has to be at least 1 but not {self.n}")
        object.__setattr__(self, 'direction', Direction(self.direction))
        object.__setattr__(self, 'polarization', Polarization(self.polarization))

    @property
    def component(self):
        return component_index(self.direction, self.polarization)


def mode_frequency(n, cavity, constants=DEFAULT_CONSTANTS):
    """Angular frequency n 2 pi c / L_z (rad/s) of the lattice point `n`.

    Parameters
    ----------
    n : `int` or `numpy.ndarray`
        Mode integer(s), at least 1.
    cavity : :class:`sedatom.physmodel.CavityConfig`
    constants : :class:`sedatom.physmodel.PhysicalConstants`, optional

    Raises
    ------
    ValueError
        If `n` is smaller than 1.
    """
    n = np.asarray(n)
    if np.any(n < 1):
        raise ValueError(f"Mode integer 'n' has to be at least 1 but not {n}")

    omega = n * cavity.omega_min(constants)
    return float(omega) if n.ndim == 0 else omega


def mode_count(cavity, constants=DEFAULT_CONSTANTS):
    """Number of retained plane waves, 2 n_max (one per direction and lattice frequency, both polarizations counted inside each wave)."""
    return 2 * cavity.n_max(constants)


def plane_wave_count(cavity, count_polarizations=False, constants=DEFAULT_CONSTANTS):
    """Number of plane waves under either counting convention.

    Parameters
    ----------
    cavity : :class:`sedatom.physmodel.CavityConfig`
    count_polarizations : `bool`, optional
        If True, every polarization is counted as a wave of its own (4 n_max), otherwise 2 n_max is returned.

        The default is False.
    """
    return (2 if count_polarizations else 1) * mode_count(cavity, constants)
