# -*- coding: utf-8 -*-
import numpy as np

from ..physmodel.constants import DEFAULT_CONSTANTS
from .modes import COMPONENTS, ELECTRIC_VECTORS, MAGNETIC_VECTORS, ModeId, mode_frequency
from .amplitudes import amplitude_table, amplitudes
from .window import WindowRange


class FieldRealization():
    """One fixed realization of the zero-point plane waves travelling along +z and -z.

    The coefficients are never stored as a whole - they are generated on demand from the seed (see :func:`sedatom.zpfield.amplitudes.standard_normal_table`)
    and are therefore identical whenever the same mode is requested again.

    Parameters
    ----------
    seed : `int`
        64 bit seed.
    cavity : :class:`sedatom.physmodel.CavityConfig`
        Geometry of the cavity.
    constants : :class:`sedatom.physmodel.PhysicalConstants`, optional
        The default is :data:`sedatom.physmodel.DEFAULT_CONSTANTS`.
    amplitude_scale : `float`, optional
        Factor applied to all coefficients - 0 switches the field off.

        The default is 1.

    Attributes
    ----------
    n_max : `int`
        Largest mode integer.
    volume : `float`
        Cavity volume L_x L_y L_z (cm^3).
    omega_min : `float`
        Lattice spacing 2 pi c / L_z (rad/s).
    """
    def __init__(self, seed, cavity, constants=DEFAULT_CONSTANTS, amplitude_scale=1., **kwds):
        if not 0 <= int(seed) < 2**64:
            raise ValueError(f"'seed' has to be a 64 bit unsigned integer but not {seed}")

        self.seed = int(seed)
        self.cavity = cavity
        self.constants = constants
        self.amplitude_scale = float(amplitude_scale)
        self.n_max = cavity.n_max(constants)
        self.volume = cavity.volume
        self.omega_min = cavity.omega_min(constants)
        self.norm = 1. / np.sqrt(self.volume)

        super().__init__(**kwds)

    @property
    def is_zero(self):
        return self.amplitude_scale == 0.

    def table(self, window):
        """Angular frequencies and scaled coefficients (omega, A, B) of all modes inside `window`.

        The realization keeps no state between calls, callers that evaluate one window repeatedly hold on to the returned table.
        """
        omega, A, B = amplitude_table(self.seed, window.n_lo, window.n_hi, self.cavity, self.constants)
        return omega, self.amplitude_scale * A, self.amplitude_scale * B

    def mode_amplitudes(self, mode):
        """Scaled coefficients of a single plane wave (see :func:`sedatom.zpfield.amplitudes.amplitudes`)."""
        a = amplitudes(self.seed, mode, self.cavity, self.constants)
        return self.amplitude_scale * a.A, self.amplitude_scale * a.B


def eval_fields(t, window, realization, table=None):
    """Electric and magnetic field of the zero-point radiation at the nucleus plane z = 0.

    On the plane z = 0 all phases k.x - omega t reduce to -omega_n t, hence
    E = V^(-1/2) sum_n sum_k eps_k [A cos(omega_n t) - B sin(omega_n t)] and B is obtained by replacing eps_k by k x eps_k.

    Parameters
    ----------
    t : `float`
        Time (s).
    window : :class:`sedatom.zpfield.WindowRange`
        Modes that are summed.
    realization : :class:`FieldRealization`
    table : `tuple`, optional
        Result of `realization.table(window)` if the caller already holds it.

        The default is None.

    Returns
    -------
    `tuple`
        (E, B) - 3-vectors in statvolt/cm and gauss. Both have zero z-component.
    """
    if window.empty or realization.is_zero:
        return np.zeros(3), np.zeros(3)

    omega, A, B = realization.table(window) if table is None else table
    phase = omega * t
    coeff = np.cos(phase) @ A - np.sin(phase) @ B

    return realization.norm * (coeff @ ELECTRIC_VECTORS), realization.norm * (coeff @ MAGNETIC_VECTORS)


def brute_force_fields(t, realization, window=None):
    """Reference summation of :func:`eval_fields` - one plane wave at a time.

    Parameters
    ----------
    t : `float`
        Time (s).
    realization : :class:`FieldRealization`
    window : :class:`sedatom.zpfield.WindowRange`, optional
        If `window` is None, all modes are summed.

        The default is None.
    """
    window = window if window is not None else WindowRange(1, realization.n_max)
    E = np.zeros(3)
    B = np.zeros(3)

    for n in range(window.n_lo, window.n_hi + 1):
        omega = mode_frequency(n, realization.cavity, realization.constants)
        for k, (direction, polarization) in enumerate(COMPONENTS):
            a, b = realization.mode_amplitudes(ModeId(n, direction, polarization))
            wave = realization.norm * (a * np.cos(-omega * t) + b * np.sin(-omega * t))
            E += wave * ELECTRIC_VECTORS[k]
            B += wave * MAGNETIC_VECTORS[k]

    return E, B
