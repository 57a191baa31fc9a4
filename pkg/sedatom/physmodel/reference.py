# -*- coding: utf-8 -*-
import numpy as np


def qm_radial_density(r, a_B):
    """Radial probability density 4 pi r^2 |psi|^2 of the hydrogen ground state.

    Parameters
    ----------
    r : `float` or `numpy.ndarray`
        Radius (cm), non-negative.
    a_B : `float`
        Bohr radius (cm).

    Returns
    -------
    `float` or `numpy.ndarray`
        (4 r^2 / a_B^3) exp(-2 r / a_B) in 1/cm.
    """
    r = np.asarray(r, dtype=np.float64)
    return 4. * r**2 / a_B**3 * np.exp(-2. * r / a_B)


def qm_radial_cdf(r, a_B):
    """Probability of finding the ground-state electron within radius `r`."""
    x = np.asarray(r, dtype=np.float64) / a_B
    return 1. - np.exp(-2. * x) * (1. + 2. * x + 2. * x**2)
