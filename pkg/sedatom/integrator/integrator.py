# -*- coding: utf-8 -*-
from abc import ABC, abstractmethod
from dataclasses import dataclass

from ..dynamics import ParticleState


@dataclass(frozen=True)
class StepOutcome:
    """Result of a single step attempt.

    Parameters
    ----------
    state : :class:`sedatom.dynamics.ParticleState`
        The new state if the step was accepted, the unchanged input state otherwise.
    dt_next : `float`
        Proposed size of the next step (s).
    accepted : `bool`
        True if the scaled error estimate does not exceed 1.
    error_estimate : `float`
        Scaled error norm.
    """
    state: ParticleState
    dt_next: float
    accepted: bool
    error_estimate: float


class Integrator(ABC):
    """
    Abstract base class of an integrator.

    All integrators must be derived from the :class:`Integrator` class.

    Note
    ----
    Any class derived from :class:`Integrator` has to implement the abstract methods `init`, `attempt_step` and `advance`.
    """
    def __init__(self, **kwds):
        super().__init__(**kwds)

    @abstractmethod
    def init(self, config, guards=None, speed_limit=None):
        raise NotImplementedError()

    @abstractmethod
    def attempt_step(self, state, dt, deriv_fn):
        raise NotImplementedError()

    @abstractmethod
    def advance(self, state, t_target, deriv_fn, observer=None):
        raise NotImplementedError()

    def __call__(self, state, t_target, deriv_fn, observer=None):
        return self.advance(state, t_target, deriv_fn, observer)

