# -*- coding: utf-8 -*-
from dataclasses import dataclass
from functools import lru_cache
import numpy as np

from ..physmodel.constants import DEFAULT_CONSTANTS
from .modes import COMPONENTS, mode_frequency


# Every mode consumes two Philox blocks (8 x 64 bit): one (A, B) pair per component
BLOCKS_PER_MODE = 2
VALUES_PER_MODE = 4 * BLOCKS_PER_MODE

CHUNK_SIZE = 2048


@dataclass(frozen=True)
class ModeAmplitudes:
    """Expansion coefficients A and B of a single plane wave (before the 1/sqrt(V) normalization)."""
    A: float
    B: float


def uniform_from_raw(raw):
    """Maps raw 64 bit integers onto doubles in (0, 1]."""
    return ((raw >> np.uint64(11)).astype(np.float64) + 1.) * 2.**-53


def standard_normal_table(seed, n_lo, n_hi):
    """Standard normal variates of the modes `n_lo`, ..., `n_hi`.

    The variates of mode n are produced by a Philox counter-based generator keyed with `seed` and started at counter 2(n - 1).
    Therefore, they depend on `seed` and n only - not on which other modes are generated or in which order.

    Parameters
    ----------
    seed : `int`
        64 bit seed of the field realization.
    n_lo : `int`
        First mode integer (at least 1).
    n_hi : `int`
        Last mode integer (inclusive).

    Returns
    -------
    `numpy.ndarray`
        Array of shape (n_hi - n_lo + 1, 4, 2) - per mode, component (see :data:`sedatom.zpfield.modes.COMPONENTS`) and coefficient (A, B).
    """
    count = n_hi - n_lo + 1
    if count <= 0:
        return np.zeros((0, len(COMPONENTS), 2))
    if n_lo < 1:
        raise ValueError(f"Mode integer 'n_lo' has to be at least 1 but not {n_lo}")

    bitgen = np.random.Philox(key=int(seed), counter=BLOCKS_PER_MODE * (int(n_lo) - 1))
    u = uniform_from_raw(bitgen.random_raw(VALUES_PER_MODE * count)).reshape(count, VALUES_PER_MODE)

    # Box-Muller - every pair of uniforms yields the (A, B) pair of one component
    radius = np.sqrt(-2. * np.log(u[:, 0::2]))
    phase = 2. * np.pi * u[:, 1::2]

    return np.stack((radius * np.cos(phase), radius * np.sin(phase)), axis=-1)


@lru_cache(maxsize=128)
def _standard_normal_chunk(seed, chunk):
    table = standard_normal_table(seed, chunk * CHUNK_SIZE + 1, (chunk + 1) * CHUNK_SIZE)
    table.setflags(write=False)
    return table


def cached_standard_normal_table(seed, n_lo, n_hi):
    """Same as :func:`standard_normal_table` but assembled from cached chunks of :data:`CHUNK_SIZE` modes."""
    if n_hi < n_lo:
        return np.zeros((0, len(COMPONENTS), 2))

    first, last = (n_lo - 1) // CHUNK_SIZE, (n_hi - 1) // CHUNK_SIZE
    table = np.concatenate([_standard_normal_chunk(int(seed), c) for c in range(first, last + 1)], axis=0)
    offset = first * CHUNK_SIZE + 1

    return table[n_lo - offset:n_hi - offset + 1]


def amplitude_std(omega, constants=DEFAULT_CONSTANTS):
    """Standard deviation sqrt(2 pi hbar omega) of the coefficients of a mode with angular frequency `omega`."""
    return np.sqrt(2. * np.pi * constants.hbar * omega)


def amplitude_table(seed, n_lo, n_hi, cavity, constants=DEFAULT_CONSTANTS, use_cache=True):
    """Coefficients of all modes `n_lo`, ..., `n_hi` of a field realization.

    Returns
    -------
    `tuple`
        (omega, A, B) - the angular frequencies of shape (count,) and the coefficients, each of shape (count, 4).
    """
    z = cached_standard_normal_table(seed, n_lo, n_hi) if use_cache else standard_normal_table(seed, n_lo, n_hi)
    if z.shape[0] == 0:
        return np.zeros(0), np.zeros((0, len(COMPONENTS))), np.zeros((0, len(COMPONENTS)))

    omega = mode_frequency(np.arange(n_lo, n_hi + 1), cavity, constants)
    sigma = amplitude_std(omega, constants)[:, np.newaxis]

    return omega, sigma * z[:, :, 0], sigma * z[:, :, 1]


def amplitudes(seed, mode, cavity, constants=DEFAULT_CONSTANTS):
    """Coefficients of a single plane wave.

    Each coefficient is a zero mean Gaussian with variance 2 pi hbar omega_n. Identical `seed` and `mode` always yield identical values.

    Parameters
    ----------
    seed : `int`
        64 bit seed of the field realization.
    mode : :class:`sedatom.zpfield.ModeId`
        The plane wave.
    cavity : :class:`sedatom.physmodel.CavityConfig`
    constants : :class:`sedatom.physmodel.PhysicalConstants`, optional

    Returns
    -------
    :class:`ModeAmplitudes`
    """
    z = standard_normal_table(seed, mode.n, mode.n)[0, mode.component]
    sigma = amplitude_std(mode_frequency(mode.n, cavity, constants), constants)

    return ModeAmplitudes(A=float(sigma * z[0]), B=float(sigma * z[1]))
