# -*- coding: utf-8 -*-
import numpy as np

from ..exceptions import SingularityError
from ..physmodel.constants import DEFAULT_CONSTANTS
from ..zpfield import eval_fields, window_indices, full_range
from .state import PhaseDerivative


SINGULARITY_FLOOR = 1e-11     # cm


def _radius(z):
    r = np.hypot(z[0], z[1])
    if r < SINGULARITY_FLOOR:
        raise SingularityError(r, SINGULARITY_FLOOR)
    return r


def coulomb_accel(z, constants=DEFAULT_CONSTANTS):
    """Acceleration -e^2 z / (m |z|^3) caused by the nucleus.

    Raises
    ------
    SingularityError
        If |z| is below :data:`SINGULARITY_FLOOR`.
    """
    r = _radius(z)
    return -constants.e**2 / (constants.m * r**3) * np.asarray(z)


def radiation_reaction_accel(z, v, constants=DEFAULT_CONSTANTS):
    """Radiation reaction (2/3)(e^2/c^3) d^3z/dt^3 divided by m, where the third derivative is replaced by the time derivative of the Coulomb acceleration.

    Differentiating -e^2 z / (m |z|^3) along the trajectory gives
    -(2/3) e^4/(m^2 c^3) [v/|z|^3 - 3 z (z.v)/|z|^5].

    Raises
    ------
    SingularityError
        If |z| is below :data:`SINGULARITY_FLOOR`.
    """
    r = _radius(z)
    z = np.asarray(z)
    v = np.asarray(v)
    k = 2. / 3. * constants.e**4 / (constants.m**2 * constants.c**3)

    return -k * (v / r**3 - 3. * z * np.dot(z, v) / r**5)


def lorentz_accel_3d(v, E, B, constants=DEFAULT_CONSTANTS):
    """Acceleration (-e/m)(E + v x B / c) of the electron in three dimensions."""
    v3 = np.array([v[0], v[1], 0.])
    return -constants.e / constants.m * (np.asarray(E) + np.cross(v3, B) / constants.c)


def lorentz_accel(v, E, B, constants=DEFAULT_CONSTANTS):
    """Planar part of the Lorentz acceleration - the out-of-plane component is dropped because the orbit is confined to the x-y plane."""
    return lorentz_accel_3d(v, E, B, constants)[:2]


def field_window(state, realization, config):
    """Modes acting on the electron in `state` - the radius window or, with `field_mode="full"`, all modes."""
    if config.field_mode == "full":
        return full_range(realization)
    return window_indices(state.radius, config.window_fraction, realization)


def total_derivative(state, realization, config, window=None):
    """Right-hand side of the equation of motion.

    Parameters
    ----------
    state : :class:`sedatom.dynamics.ParticleState`
        Current state.
    realization : :class:`sedatom.zpfield.FieldRealization`
        The zero-point field.
    config : :class:`sedatom.physmodel.RunConfig`
        Provides the constants, window fraction, field mode and whether radiation reaction is included.
    window : :class:`sedatom.zpfield.WindowRange`, optional
        Modes that are summed. If `window` is None, it is computed from the radius of `state`.

        The default is None.

    Returns
    -------
    :class:`sedatom.dynamics.PhaseDerivative`
        dz/dt = v and dv/dt = Coulomb + radiation reaction + Lorentz acceleration.

    Raises
    ------
    SingularityError
        If the electron is too close to the nucleus.
    """
    if window is None and not realization.is_zero:
        window = field_window(state, realization, config)

    accel = acceleration(state.t, state.position, state.velocity, realization, config, window)
    return PhaseDerivative(dz_dt=state.velocity.copy(), dv_dt=accel)


def acceleration(t, z, v, realization, config, window, table=None):
    """Total planar acceleration for a given (already selected) `window` and, optionally, its amplitude `table`."""
    constants = config.constants

    accel = coulomb_accel(z, constants)
    if config.radiation_reaction:
        accel = accel + radiation_reaction_accel(z, v, constants)
    if not realization.is_zero:
        E, B = eval_fields(t, window, realization, table)
        accel = accel + lorentz_accel(v, E, B, constants)

    return accel
