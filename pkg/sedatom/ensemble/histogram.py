# -*- coding: utf-8 -*-
from dataclasses import dataclass
import numpy as np

from ..exceptions import BinningMismatchError, EmptyHistogramError
from ..physmodel.constants import bohr_radius
from ..physmodel.reference import qm_radial_density


@dataclass(frozen=True, eq=False)
class RadialDensity:
    """Normalized radial probability density sampled at the bin centers.

    Parameters
    ----------
    r_center : `numpy.ndarray`
        Bin centers (cm).
    P : `numpy.ndarray`
        Probability density (1/cm).
    bin_width : `float`
        Bin width (cm).
    """
    r_center: np.ndarray
    P: np.ndarray
    bin_width: float

    def __iter__(self):
        return iter((self.r_center, self.P))

    @property
    def mass(self):
        """Probability inside the recorded range."""
        return float(np.sum(self.P) * self.bin_width)

    @property
    def peak_radius(self):
        return float(self.r_center[np.argmax(self.P)])


class RadialHistogram():
    """Time-weighted occupancy of radial bins [i bin_width, (i+1) bin_width).

    Parameters
    ----------
    bin_width : `float`
        Bin width (cm).
    r_max : `float`
        Largest recorded radius (cm). Residence time at r >= r_max only counts towards `total_time`.

    Attributes
    ----------
    weights : `numpy.ndarray`
        Accumulated residence time (s) per bin.
    total_time : `float`
        Total accumulated time (s), including residence outside the recorded range.
    """
    def __init__(self, bin_width, r_max, **kwds):
        if not bin_width > 0. or not r_max > 0.:
            raise ValueError(f"'bin_width' and 'r_max' have to be strictly positive but not {bin_width} and {r_max}")

        self.bin_width = float(bin_width)
        self.r_max = float(r_max)
        self.n_bins = int(np.ceil(r_max / bin_width - 1e-9))
        self.weights = np.zeros(self.n_bins)
        self.total_time = 0.

        super().__init__(**kwds)

    @classmethod
    def from_config(cls, config):
        return cls(config.bin_width, config.r_max)

    @property
    def empty(self):
        return self.total_time == 0.

    @property
    def out_of_range_time(self):
        return self.total_time - float(np.sum(self.weights))

    @property
    def r_center(self):
        return (np.arange(self.n_bins) + .5) * self.bin_width

    def same_binning(self, other):
        return self.bin_width == other.bin_width and self.r_max == other.r_max

    def copy(self):
        h = RadialHistogram(self.bin_width, self.r_max)
        h.weights = self.weights.copy()
        h.total_time = self.total_time
        return h

    def accumulate(self, r, dt):
        """Adds the residence time `dt` (s) at radius `r` (cm).

        Returns
        -------
        :class:`RadialHistogram`
            The histogram itself.
        """
        if dt < 0.:
            raise ValueError(f"'dt' has to be non-negative but not {dt}")

        self.total_time += dt
        if 0. <= r < self.r_max:
            i = int(r // self.bin_width)
            if i < self.n_bins:
                self.weights[i] += dt

        return self

    def normalize(self):
        """Converts the occupancy into a probability density P_i = weights_i / (total_time bin_width).

        Returns
        -------
        :class:`RadialDensity`

        Raises
        ------
        EmptyHistogramError
            If no time has been accumulated.
        """
        if self.empty:
            raise EmptyHistogramError("Can not normalize a histogram without any accumulated time")

        return RadialDensity(r_center=self.r_center, P=self.weights / (self.total_time * self.bin_width), bin_width=self.bin_width)

    def merge(self, other):
        """Sum of two histograms with identical binning.

        Raises
        ------
        BinningMismatchError
            If the binning of both histograms differs.
        """
        if not self.same_binning(other):
            raise BinningMismatchError(f"Can not merge histograms with binning ({self.bin_width}, {self.r_max}) and ({other.bin_width}, {other.r_max})")

        h = RadialHistogram(self.bin_width, self.r_max)
        h.weights = self.weights + other.weights
        h.total_time = self.total_time + other.total_time
        return h

    def __add__(self, other):
        return self.merge(other)


def accumulate(hist, r, dt):
    return hist.accumulate(r, dt)


def normalize(hist):
    return hist.normalize()


def merge(h1, h2):
    return h1.merge(h2)


def merge_all(histograms):
    """Merges a non-empty list of histograms from left to right."""
    histograms = list(histograms)
    result = histograms[0].copy()
    for h in histograms[1:]:
        result = result.merge(h)
    return result


def l1_distance(density, reference_fn=qm_radial_density, a_B=None):
    """Distance sum_i |P_i - P_ref(r_i)| bin_width between a density and a reference density.

    Parameters
    ----------
    density : :class:`RadialDensity`
        The normalized density.
    reference_fn : `callable`, optional
        Reference density reference_fn(r, a_B).

        The default is :func:`sedatom.physmodel.qm_radial_density`.
    a_B : `float`, optional
        Bohr radius (cm).

        If `a_B` is None, the Bohr radius of the default constants is used.

        The default is None.

    Returns
    -------
    `float`
        The distance - a value in [0, 2] for probability densities.
    """
    a_B = a_B if a_B is not None else bohr_radius()

    return float(np.sum(np.abs(density.P - reference_fn(density.r_center, a_B))) * density.bin_width)
