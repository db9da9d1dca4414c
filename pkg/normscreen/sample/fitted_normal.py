"""Fitted normal model module."""
from dataclasses import dataclass
from typing import Union

from normscreen.errors import DomainError
from normscreen.special import normal_cdf

import numpy as np
from numpy.typing import NDArray

from .sample import Sample


@dataclass(frozen=True)
class FittedNormal:
    """Normal model used as the theoretical distribution.

    Parameters
    ----------
    mu : float
        Location.
    sigma : float
        Scale, strictly positive.
    """

    mu: float
    sigma: float

    def __post_init__(self) -> None:
        if not (np.isfinite(self.mu) and np.isfinite(self.sigma)):
            raise DomainError("Normal model parameters must be finite.")
        if not self.sigma > 0:
            raise DomainError(f"sigma must be positive, got {self.sigma}.")

    def standardize(
        self, x: Union[float, NDArray[np.float64]]
    ) -> Union[float, NDArray[np.float64]]:
        """Return standard scores ``(x - mu) / sigma``."""
        return np.divide(np.subtract(x, self.mu), self.sigma)

    def cdf(
        self, x: Union[float, NDArray[np.float64]]
    ) -> Union[float, NDArray[np.float64]]:
        """Model cumulative probability of ``x``."""
        return normal_cdf(self.standardize(x))

    def is_plug_in_for(self, sample: Sample) -> bool:
        """Check whether the model was estimated from ``sample`` itself.

        Parameters
        ----------
        sample : Sample
            Observations.

        Returns
        -------
        bool
            True when mu and sigma equal the sample mean and standard
            deviation.
        """
        mom = sample.moments
        return bool(
            np.isclose(self.mu, mom.mean, rtol=1e-12, atol=1e-12)
            and np.isclose(self.sigma, mom.s, rtol=1e-12, atol=0.0)
        )


def fit_normal(sample: Sample) -> FittedNormal:
    """Fit a normal model by moment plug-in.

    ``mu`` is the sample mean and ``sigma`` the sample standard deviation
    with divisor ``n - 1``.

    Parameters
    ----------
    sample : Sample
        Observations.

    Returns
    -------
    FittedNormal
        Plug-in model.

    Raises
    ------
    DegenerateSampleError
        All observations are identical.
    """
    mom = sample.moments
    return FittedNormal(mu=mom.mean, sigma=mom.s)
