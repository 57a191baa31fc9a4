# -*- coding: utf-8 -*-
from dataclasses import dataclass
import numpy as np

from ..physmodel.constants import DEFAULT_CONSTANTS, circular_frequency


@dataclass(frozen=True)
class WindowRange:
    """Contiguous, inclusive range [n_lo, n_hi] of mode integers - empty if n_lo > n_hi."""
    n_lo: int
    n_hi: int

    @property
    def empty(self):
        return self.n_lo > self.n_hi

    def __len__(self):
        return max(0, self.n_hi - self.n_lo + 1)

    def __contains__(self, n):
        return self.n_lo <= n <= self.n_hi

    def issubset(self, other):
        return self.empty or (other.n_lo <= self.n_lo and self.n_hi <= other.n_hi)


def window_bounds(r, f, constants=DEFAULT_CONSTANTS):
    """Frequency band of the radius window r(1 - f) ... r(1 + f).

    Parameters
    ----------
    r : `float`
        Current radius (cm).
    f : `float`
        Window fraction, 0 <= f < 1.
    constants : :class:`sedatom.physmodel.PhysicalConstants`, optional

    Returns
    -------
    `tuple`
        (omega_lo, omega_hi) - the circular frequencies at r(1 + f) and r(1 - f).

    Raises
    ------
    ValueError
        If `f` is not in [0, 1) or `r` is not strictly positive.
    """
    if not 0. <= f < 1.:
        raise ValueError(f"Window fraction 'f' has to lie in [0, 1) but not {f}")

    return circular_frequency(r * (1. + f), constants), circular_frequency(r * (1. - f), constants)


def window_indices(r, f, realization):
    """Mode integers whose lattice frequency lies inside the window around radius `r`.

    Parameters
    ----------
    r : `float`
        Current radius (cm).
    f : `float`
        Window fraction.
    realization : :class:`sedatom.zpfield.FieldRealization`

    Returns
    -------
    :class:`WindowRange`
        All n with omega_lo <= n omega_min <= omega_hi, clamped to [1, n_max]. The range might be empty.
    """
    omega_lo, omega_hi = window_bounds(r, f, realization.constants)
    omega_min = realization.omega_min

    n_lo = max(1, int(np.ceil(omega_lo / omega_min)))
    n_hi = min(realization.n_max, int(np.floor(omega_hi / omega_min)))

    return WindowRange(n_lo, n_hi)


def full_range(realization):
    """Window that covers every mode of `realization`."""
    return WindowRange(1, realization.n_max)
