# -*- coding: utf-8 -*-
from dataclasses import dataclass
import numpy as np

from ..physmodel.constants import DEFAULT_CONSTANTS, circular_speed, orbit_diagnostics


@dataclass(frozen=True, eq=False)
class ParticleState:
    """Planar phase-space state of the electron.

    Parameters
    ----------
    position : `numpy.ndarray`
        Position z in the x-y plane (cm).
    velocity : `numpy.ndarray`
        Velocity (cm/s).
    t : `float`
        Time (s).
    """
    position: np.ndarray
    velocity: np.ndarray
    t: float = 0.

    def __post_init__(self):
        object.__setattr__(self, 'position', np.array(self.position, dtype=np.float64).reshape(2))
        object.__setattr__(self, 'velocity', np.array(self.velocity, dtype=np.float64).reshape(2))
        object.__setattr__(self, 't', float(self.t))

    @classmethod
    def from_vector(cls, y, t):
        return cls(position=y[:2], velocity=y[2:], t=t)

    @classmethod
    def circular(cls, r, constants=DEFAULT_CONSTANTS, t=0.):
        """Counterclockwise circular orbit that starts at (r, 0)."""
        return cls(position=[r, 0.], velocity=[0., circular_speed(r, constants)], t=t)

    @property
    def vector(self):
        """Phase-space vector (x, y, vx, vy)."""
        return np.concatenate((self.position, self.velocity))

    @property
    def radius(self):
        return float(np.hypot(self.position[0], self.position[1]))

    @property
    def speed(self):
        return float(np.hypot(self.velocity[0], self.velocity[1]))

    def diagnostics(self, constants=DEFAULT_CONSTANTS):
        return orbit_diagnostics(self.position, self.velocity, constants)

    def __eq__(self, other):
        return isinstance(other, ParticleState) and self.t == other.t and np.array_equal(self.position, other.position) and np.array_equal(self.velocity, other.velocity)


@dataclass(frozen=True, eq=False)
class PhaseDerivative:
    """Time derivative of a :class:`ParticleState` - velocity (cm/s) and acceleration (cm/s^2)."""
    dz_dt: np.ndarray
    dv_dt: np.ndarray

    @property
    def vector(self):
        return np.concatenate((self.dz_dt, self.dv_dt))
