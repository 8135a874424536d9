"""Equi-depth histograms and the distribution functions derived from them.

A histogram with B bins is stored as a sorted array of B+1 boundary values.
Every bin carries mass exactly 1/B, so bin widths adapt to the data: dense
regions get narrow bins, sparse regions wide ones.  The approximate CDF is
piecewise linear (uniform-within-bin assumption) and the approximate PDF is
piecewise constant.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True, eq=False)
class EquiDepthHistogram:
    """Sorted bin boundaries; bounds[0] is the observed min, bounds[-1] the max.

    Boundaries may repeat when the underlying data is heavily tied.  A
    zero-width bin represents a point mass of 1/B: the CDF steps by that
    amount at the shared boundary value and stays right-continuous.
    """

    bounds: np.ndarray = field(repr=True)

    def __post_init__(self):
        bounds = np.asarray(self.bounds, dtype=np.float64)
        if bounds.ndim != 1 or bounds.size < 2:
            raise ValueError("histogram needs at least two boundaries")
        if not np.all(np.isfinite(bounds)):
            raise ValueError("histogram boundaries must be finite")
        if np.any(np.diff(bounds) < 0):
            raise ValueError("bounds not sorted")
        bounds.setflags(write=False)
        object.__setattr__(self, "bounds", bounds)

    @property
    def bin_count(self) -> int:
        return self.bounds.size - 1

    @property
    def lo(self) -> float:
        return float(self.bounds[0])

    @property
    def hi(self) -> float:
        return float(self.bounds[-1])

    def __eq__(self, other):
        if not isinstance(other, EquiDepthHistogram):
            return NotImplemented
        return np.array_equal(self.bounds, other.bounds)


def build_equi_depth(values, bin_count: int) -> EquiDepthHistogram:
    """Build a B-bin equi-depth histogram from raw (non-null, finite) values.

    Boundary j is the element at rank floor(j * (N-1) / B) of the sorted
    input, so the boundaries are always observed values and the first/last
    boundaries are the min/max.
    """
    if bin_count < 1:
        raise ValueError("invalid bin count")
    data = np.asarray(values, dtype=np.float64)
    if data.size == 0:
        raise ValueError("no data")
    if not np.all(np.isfinite(data)):
        raise ValueError("values must be finite")
    data = np.sort(data)
    n = data.size
    idx = [(j * (n - 1)) // bin_count for j in range(bin_count + 1)]
    return EquiDepthHistogram(data[idx])


def _locate(bounds: np.ndarray, c: float) -> int:
    """Greatest index j with bounds[j] <= c, or -1 if c < bounds[0]."""
    return int(np.searchsorted(bounds, c, side="right")) - 1


def cdf(h: EquiDepthHistogram, c: float) -> float:
    """Approximate P(X <= c): 0 below the histogram, 1 at and above its max,
    linear interpolation within the containing bin otherwise.

    Right-continuous; at a repeated boundary the value jumps by 1/B per
    zero-width bin collapsed there.
    """
    bounds = h.bounds
    if c < bounds[0]:
        return 0.0
    if c >= bounds[-1]:
        return 1.0
    b = h.bin_count
    j = _locate(bounds, c)
    # c < bounds[-1] guarantees j < b and a positive width for bin j.
    width = bounds[j + 1] - bounds[j]
    return float((j + (c - bounds[j]) / width) / b)


def pdf(h: EquiDepthHistogram, c: float) -> float:
    """Approximate density at c: (1/B) / bin_width inside [lo, hi), else 0.

    Mass held by zero-width bins is a CDF step, not a finite density, so it
    does not show up here.
    """
    bounds = h.bounds
    if c < bounds[0] or c >= bounds[-1]:
        return 0.0
    j = _locate(bounds, c)
    width = bounds[j + 1] - bounds[j]
    return float(1.0 / (h.bin_count * width))
