"""Hartley class-count rules."""
from typing import TYPE_CHECKING

from normscreen.errors import DegenerateSampleError, TooFewObservationsError
from normscreen.special import normal_cdf

import numpy as np
from numpy.typing import NDArray

from scipy.optimize import bisect

if TYPE_CHECKING:
    from normscreen.sample import FittedNormal, Sample

MIN_OBSERVATIONS = 8


def class_count_hartley(n: int) -> int:
    r"""Number of frequency classes from the rounded Hartley entropy.

    .. math::
        k = \left\lfloor \log_2(2N) + \frac{1}{2} \right\rfloor

    Parameters
    ----------
    n : int
        Number of observations, at least 8.

    Returns
    -------
    int
        Number of classes (half-up rounding).

    Raises
    ------
    TooFewObservationsError
        If ``n < 8``.
    """
    if n < MIN_OBSERVATIONS:
        raise TooFewObservationsError(
            f"The Hartley class count needs at least {MIN_OBSERVATIONS} "
            f"observations, got {n}."
        )
    return int(np.floor(np.log2(2 * n) + 0.5))


def _standard_quantile(probability: float) -> float:
    """Standard normal quantile by bisection on the cdf."""
    return bisect(
        lambda z: normal_cdf(z) - probability, -12.0, 12.0, xtol=1e-14
    )


def hartley_equal_probability(
    sample: "Sample", model: "FittedNormal"
) -> NDArray[np.float64]:
    r"""Interior edges of Hartley classes with equal model probability.

    Edge :math:`e_i` satisfies :math:`F(e_i) = i / k` under the model, so
    every class expects :math:`N / k` observations.

    Parameters
    ----------
    sample : Sample
        Observations.
    model : FittedNormal
        Theoretical distribution.

    Returns
    -------
    NDArray[np.float64]
        ``k - 1`` increasing interior edges.
    """
    k = class_count_hartley(sample.n)
    quantiles = np.array([_standard_quantile(i / k) for i in range(1, k)])

    return model.mu + model.sigma * quantiles


def hartley_equal_width(
    sample: "Sample", model: "FittedNormal"
) -> NDArray[np.float64]:
    """Interior edges of Hartley classes of equal width over the data range.

    Parameters
    ----------
    sample : Sample
        Observations.
    model : FittedNormal
        Theoretical distribution (unused, kept for a uniform rule
        signature).

    Returns
    -------
    NDArray[np.float64]
        ``k - 1`` increasing interior edges.
    """
    k = class_count_hartley(sample.n)
    low, high = sample.min_value, sample.max_value

    if low == high:
        raise DegenerateSampleError("Equal-width classes need a data range.")

    return low + (high - low) * np.arange(1, k) / k
