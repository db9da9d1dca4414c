"""Sample moments module."""
from dataclasses import dataclass
from typing import TYPE_CHECKING

from normscreen.errors import DegenerateSampleError, TooFewObservationsError

import numpy as np

if TYPE_CHECKING:
    from .sample import Sample


@dataclass(frozen=True)
class Moments:
    r"""Central and standardized moments of a sample.

    .. math::
        m_k = \frac{1}{N} \sum_{i=1}^{N} (X_i - \bar{X})^k \qquad
        g_1 = \frac{m_3}{m_2^{3/2}} \qquad g_2 = \frac{m_4}{m_2^2} - 3

    Parameters
    ----------
    mean : float
        Sample mean.
    m2 : float
        Second central moment (divisor N).
    m3 : float
        Third central moment (divisor N).
    m4 : float
        Fourth central moment (divisor N).
    s : float
        Sample standard deviation (divisor N - 1).
    g1 : float
        Skewness.
    g2 : float
        Excess kurtosis.
    """

    mean: float
    m2: float
    m3: float
    m4: float
    s: float
    g1: float
    g2: float

    @property
    def b2(self) -> float:
        """Non-excess kurtosis ratio m4 / m2²."""
        return self.g2 + 3.0


def moments(sample: "Sample") -> Moments:
    """Compute the moments of a sample with a two-pass algorithm.

    The mean is computed first and the centered powers afterwards, which
    keeps the higher moments free of cancellation.

    Parameters
    ----------
    sample : Sample
        Observations.

    Returns
    -------
    Moments
        Sample moments.

    Raises
    ------
    DegenerateSampleError
        All observations are identical.
    """
    values = sample.values
    n = np.size(values)

    if n < 2:
        raise TooFewObservationsError("Moments need at least 2 observations.")
    if values[0] == values[-1]:
        raise DegenerateSampleError(
            f"Sample '{sample.label}' has zero spread: all observations "
            f"equal {values[0]}."
        )

    mean = np.mean(values)
    deviations = values - mean
    squares = deviations * deviations

    m2 = np.mean(squares)
    m3 = np.mean(squares * deviations)
    m4 = np.mean(squares * squares)

    return Moments(
        mean=float(mean),
        m2=float(m2),
        m3=float(m3),
        m4=float(m4),
        s=float(np.sqrt(np.sum(squares) / (n - 1))),
        g1=float(m3 / m2**1.5),
        g2=float(m4 / m2**2 - 3.0),
    )
