"""Pearson-Fisher chi-squared statistic module."""
from normscreen.binning import FrequencyClasses
from normscreen.errors import DomainError, InsufficientDFError
from normscreen.special import chi2_sf

import numpy as np

from .result import TestName, TestResult


def chi_squared_test(
    classes: FrequencyClasses, t_params: int = 2, alpha: float = 0.05
) -> TestResult:
    r"""Pearson chi-squared test with Fisher's degrees of freedom.

    .. math::
        X^2 = \sum_{i=1}^{k} \frac{(O_i - E_i)^2}{E_i} \qquad
        df = k - t - 1

    | :math:`O_i, E_i`: observed and expected counts of the class.
    | :math:`k`: number of classes.
    | :math:`t`: number of parameters estimated from the sample.

    Parameters
    ----------
    classes : FrequencyClasses
        Merged frequency classes.
    t_params : int, optional
        Estimated parameters, by default 2 (mean and standard deviation).
    alpha : float, optional
        Significance level, by default 0.05.

    Returns
    -------
    TestResult
        ChiSquared result.

    Raises
    ------
    DomainError
        Some expected count is not positive.
    InsufficientDFError
        ``k - t_params - 1 < 1``.
    """
    observed = np.asarray(classes.observed, dtype=np.float64)
    expected = np.asarray(classes.expected, dtype=np.float64)

    if np.any(expected <= 0):
        raise DomainError("Expected class counts must be positive.")

    df = classes.k - t_params - 1
    if df < 1:
        raise InsufficientDFError(
            f"{classes.k} classes and {t_params} estimated parameters leave "
            f"{df} degrees of freedom."
        )

    x2 = float(np.sum((observed - expected) ** 2 / expected))

    return TestResult(
        test=TestName.CHI_SQUARED,
        statistic=x2,
        p_values=(("chi2", chi2_sf(x2, df)),),
        alpha=alpha,
        df=df,
        metadata={"classes": classes.k},
    )
