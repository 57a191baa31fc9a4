# -*- coding: utf-8 -*-
from abc import ABC, abstractmethod
import numpy as np

from ..zpfield import window_indices, full_range
from .forces import acceleration


class RightHandSide(ABC):
    """Base class of the right-hand side dy/dt = f(t, y) of a first order system.

    Note
    ----
    The class :class:`RightHandSide` can not be instantiated because it contains an abstract method.
    """
    def __init__(self, **kwds):
        super().__init__(**kwds)

    @abstractmethod
    def evaluate(self, t, y):
        """Computes dy/dt.

        Abstract method for evaluating the right-hand side at time `t` and state vector `y`.

        Note
        ----
        All derived classes must implement this method.
        """
        raise NotImplementedError()

    def frozen(self, t, y):
        """Right-hand side used for all stages of a step that starts at (`t`, `y`).

        By default this is the right-hand side itself. Derived classes can fix quantities that must not change within a single step.

        Returns
        -------
        `callable`
            A callable f(t, y).
        """
        return self.evaluate

    def __call__(self, t, y):
        return self.evaluate(t, y)


class FunctionRightHandSide(RightHandSide):
    """Wraps a plain callable f(t, y)."""
    def __init__(self, f, **kwds):
        self.f = f

        super().__init__(**kwds)

    def evaluate(self, t, y):
        return np.asarray(self.f(t, y), dtype=np.float64)


def as_rhs(f):
    """Returns `f` if it already is a :class:`RightHandSide`, otherwise wraps it."""
    return f if isinstance(f, RightHandSide) else FunctionRightHandSide(f)


class EquationOfMotion(RightHandSide):
    """Equation of motion of the electron on the phase-space vector (x, y, vx, vy).

    The mode window is selected from the radius at the beginning of every step and kept for all stages of that step (see :meth:`frozen`).

    Parameters
    ----------
    realization : :class:`sedatom.zpfield.FieldRealization`
        The zero-point field.
    config : :class:`sedatom.physmodel.RunConfig`
        Run configuration.
    """
    def __init__(self, realization, config, **kwds):
        self.realization = realization
        self.config = config
        self._cached = (None, None)

        super().__init__(**kwds)

    def window(self, y):
        if self.config.field_mode == "full":
            return full_range(self.realization)
        return window_indices(np.hypot(y[0], y[1]), self.config.window_fraction, self.realization)

    def table(self, window):
        """Amplitude table of `window` - the table of the latest window is kept since consecutive steps mostly share it."""
        cached_window, table = self._cached
        if window != cached_window:
            table = self.realization.table(window)
            self._cached = (window, table)
        return table

    def evaluate_in(self, t, y, window):
        table = None if window is None or window.empty else self.table(window)
        a = acceleration(t, y[:2], y[2:], self.realization, self.config, window, table)
        return np.array([y[2], y[3], a[0], a[1]])

    def evaluate(self, t, y):
        window = None if self.realization.is_zero else self.window(y)
        return self.evaluate_in(t, y, window)

    def frozen(self, t, y):
        window = None if self.realization.is_zero else self.window(y)
        return lambda t_, y_: self.evaluate_in(t_, y_, window)
