"""Sample module.

Class to hold the ascending-sorted observations every statistic consumes.
"""
from functools import cached_property
from typing import Iterable, Union

from normscreen.errors import (
    EmptyInputError,
    NonFiniteValueError,
    TooFewObservationsError,
)

import numpy as np
from numpy.typing import NDArray

from .moments import Moments, moments

MIN_OBSERVATIONS = 3


class Sample:
    """Validated, ascending-sorted observations.

    Samples are immutable: the values array is read-only and attributes
    cannot be reassigned. Use :func:`make_sample` to build one from raw
    (unsorted) data.

    Example:

    >>> sample = make_sample([3.0, 1.0, 2.0], label="toy")
    >>> sample.values
    array([1., 2., 3.])

    Parameters
    ----------
    values : NDArray[np.float64]
        Finite observations, already sorted non-decreasing.
    label : str
        Dataset name.

    Attributes
    ----------
    n : int
        Number of observations.
    """

    def __init__(self, values: NDArray[np.float64], label: str) -> None:
        values = np.array(values, dtype=np.float64)

        if values.ndim != 1:
            raise ValueError("Sample values must be one dimensional.")
        if np.size(values) < MIN_OBSERVATIONS:
            raise TooFewObservationsError(
                f"A sample needs at least {MIN_OBSERVATIONS} observations, "
                f"got {np.size(values)}."
            )
        if not np.all(np.isfinite(values)):
            index = int(np.argmax(~np.isfinite(values)))
            raise NonFiniteValueError(index, float(values[index]))
        if np.any(np.diff(values) < 0):
            raise ValueError("Sample values must be sorted ascending.")

        values.setflags(write=False)
        self._values = values
        self._label = str(label)

    @property
    def values(self) -> NDArray[np.float64]:
        """Ascending observations (read-only array)."""
        return self._values

    @values.setter
    def values(self, new_values):
        raise ValueError(
            "Sample values are not mutable, build a new sample with "
            "make_sample."
        )

    @property
    def label(self) -> str:
        """Dataset name."""
        return self._label

    @property
    def n(self) -> int:
        """Number of observations."""
        return int(np.size(self._values))

    @property
    def min_value(self) -> float:
        """Smallest observation."""
        return float(self._values[0])

    @property
    def max_value(self) -> float:
        """Largest observation."""
        return float(self._values[-1])

    @cached_property
    def moments(self) -> Moments:
        """Central and standardized moments of the sample."""
        return moments(self)

    @cached_property
    def ties_fraction(self) -> float:
        """Fraction of observations that repeat an earlier value."""
        return 1.0 - np.size(np.unique(self._values)) / self.n

    def without(self, index: int) -> "Sample":
        """Return a new sample with one observation removed.

        Parameters
        ----------
        index : int
            Position of the observation in sorted order.

        Returns
        -------
        Sample
            Sample with ``n - 1`` observations and the same label.
        """
        return Sample(np.delete(self._values, index), self._label)

    def __len__(self) -> int:
        """Count of observations.

        Returns
        -------
        int
            Number of observations.
        """
        return self.n

    def __repr__(self) -> str:
        """Represent the sample by label, size and range."""
        return (
            f"Sample(label={self._label!r}, n={self.n}, "
            f"min={self.min_value:g}, max={self.max_value:g})"
        )


def make_sample(
    raw: Union[Iterable[float], NDArray[np.float64]], label: str = "sample"
) -> Sample:
    """Build a sample from raw observations in any order.

    Parameters
    ----------
    raw : Union[Iterable[float], NDArray[np.float64]]
        Observations. Input order is irrelevant to every statistic.
    label : str, optional
        Dataset name, by default "sample".

    Returns
    -------
    Sample
        Sorted copy of the observations.

    Raises
    ------
    EmptyInputError
        No observations.
    NonFiniteValueError
        Some observation is NaN or infinite; reports its raw index.
    TooFewObservationsError
        Fewer than three observations.
    """
    if not isinstance(raw, np.ndarray):
        raw = list(raw)

    values = np.ravel(np.asarray(raw, dtype=np.float64))

    if np.size(values) == 0:
        raise EmptyInputError("No observations were supplied.")

    not_finite = ~np.isfinite(values)
    if np.any(not_finite):
        index = int(np.argmax(not_finite))
        raise NonFiniteValueError(index, float(values[index]))

    return Sample(np.sort(values, kind="stable"), label)


def ecdf(
    sample: Sample, x: Union[float, NDArray[np.float64]]
) -> Union[float, NDArray[np.float64]]:
    r"""Empirical cumulative distribution function.

    .. math::
        F_o(x) = \frac{\#\{X_i \le x\}}{n}

    Right-continuous step function; tied observations count with their
    multiplicity.

    Parameters
    ----------
    sample : Sample
        Observations.
    x : Union[float, NDArray[np.float64]]
        Evaluation point(s).

    Returns
    -------
    Union[float, NDArray[np.float64]]
        Fraction of observations less than or equal to ``x``.
    """
    counts = np.searchsorted(sample.values, x, side="right")
    fractions = np.divide(counts, sample.n)

    if np.ndim(fractions) == 0:
        return float(fractions)
    return fractions
