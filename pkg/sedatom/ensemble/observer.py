# -*- coding: utf-8 -*-
import time
import logging
from abc import ABC, abstractmethod
import numpy as np

from ..physmodel.constants import DEFAULT_CONSTANTS
from .io import CSV_FORMAT


class Observer(ABC):
    """Base class of a step observer - called as observer(state_before, state_after, dt) after every accepted step.

    Note
    ----
    The class :class:`Observer` can not be instantiated because it contains an abstract method.
    """
    def __init__(self, **kwds):
        super().__init__(**kwds)

    @abstractmethod
    def observe(self, before, after, dt):
        raise NotImplementedError()

    def __call__(self, before, after, dt):
        self.observe(before, after, dt)


class HistogramObserver(Observer):
    """Attributes the residence time of every step to the bin of the midpoint radius (|z_before| + |z_after|)/2."""
    def __init__(self, histogram, **kwds):
        self.histogram = histogram

        super().__init__(**kwds)

    def observe(self, before, after, dt):
        self.histogram.accumulate(.5 * (before.radius + after.radius), dt)


class TrajectoryRecorder(Observer):
    """Samples (t, r, eccentricity) at every `stride`-th accepted step."""
    def __init__(self, stride=1, constants=DEFAULT_CONSTANTS, rows=None, **kwds):
        self.stride = int(stride)
        self.constants = constants
        self.rows = rows if rows is not None else []
        self.count = 0

        super().__init__(**kwds)

    def record(self, state):
        self.rows.append((state.t, state.radius, state.diagnostics(self.constants)['eccentricity']))

    def observe(self, before, after, dt):
        if self.count == 0 and len(self.rows) == 0:
            self.record(before)
        self.count += 1
        if self.count % self.stride == 0:
            self.record(after)


class TraceWriter(Observer):
    """Appends every accepted step (t, x, y, vx, vy, r, dt) to a CSV file.

    Rows are buffered and written in blocks of `buffer_size`; call :meth:`close` to flush the remainder.
    """
    def __init__(self, path, buffer_size=10000, append=False, **kwds):
        self.path = path
        self.buffer_size = buffer_size
        self.buffer = []
        self.f = open(path, 'a' if append else 'w')
        if not append:
            self.f.write("t,x,y,vx,vy,r,dt\n")

        super().__init__(**kwds)

    def observe(self, before, after, dt):
        self.buffer.append((after.t, after.position[0], after.position[1], after.velocity[0], after.velocity[1], after.radius, dt))
        if len(self.buffer) >= self.buffer_size:
            self.flush()

    def flush(self):
        if len(self.buffer) > 0:
            np.savetxt(self.f, np.array(self.buffer), delimiter=",", fmt=CSV_FORMAT)
            self.buffer = []
        self.f.flush()

    def close(self):
        self.flush()
        self.f.close()


class ProgressReporter(Observer):
    """Logs the simulated time and radius of a run at most every `interval` wall-clock seconds."""
    def __init__(self, label, t_end, interval=30., **kwds):
        self.label = label
        self.t_end = t_end
        self.interval = interval
        self.steps = 0
        self.last = time.monotonic()

        super().__init__(**kwds)

    def observe(self, before, after, dt):
        self.steps += 1
        now = time.monotonic()
        if now - self.last >= self.interval:
            self.last = now
            logging.info(f"{self.label}: t={after.t:.6e} s ({100. * after.t / self.t_end:.2f}%), r={after.radius:.6e} cm, {self.steps} steps")


class ObserverChain(Observer):
    """Calls several observers in order."""
    def __init__(self, observers, **kwds):
        self.observers = [o for o in observers if o is not None]

        super().__init__(**kwds)

    def observe(self, before, after, dt):
        for o in self.observers:
            o(before, after, dt)
