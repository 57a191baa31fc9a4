# -*- coding: utf-8 -*-


class ConfigurationError(ValueError):
    """Raised if a configuration value violates one of its invariants.

    Parameters
    ----------
    key : `str`
        Name of the offending configuration key (dotted for nested records, e.g. `integrator.rel_tol`).
    message : `str`
        Description of the violation.
    """
    def __init__(self, key, message):
        self.key = key

        super().__init__(f"Invalid value of '{key}': {message}")


class SingularityError(ArithmeticError):
    """Raised if the electron comes closer to the nucleus than the singularity floor."""
    def __init__(self, radius, floor):
        self.radius = radius
        self.floor = floor

        super().__init__(f"Radius {radius:.6e} cm is below the singularity floor of {floor:.1e} cm")


class SimulationEvent(Exception):
    """Base class of all events that terminate a trajectory.

    Parameters
    ----------
    t : `float`
        Simulated time (s) at which the event was detected.
    state : :class:`sedatom.dynamics.ParticleState`
        Last valid state of the trajectory.
    """
    kind = "event"

    def __init__(self, t, state, message=None, **kwds):
        self.t = t
        self.state = state

        super().__init__(message if message is not None else f"{self.kind} at t={t:.6e} s")


class CollapseEvent(SimulationEvent):
    """The radius dropped below the lower guard radius (or hit the singularity floor)."""
    kind = "collapse"


class IonizationEvent(SimulationEvent):
    """The radius exceeded the upper guard radius."""
    kind = "ionization"


class StiffnessError(SimulationEvent):
    """Too many consecutive step rejections."""
    kind = "stiffness"


class BinningMismatchError(ValueError):
    """Raised if two histograms with different binning are merged."""
    pass


class EmptyHistogramError(ValueError):
    """Raised if a histogram without any accumulated time is normalized."""
    pass
