"""Anderson-Darling statistic module."""
from normscreen.errors import NumericalUnderflowError
from normscreen.sample import FittedNormal, Sample

import numpy as np

from .result import TestName, TestResult
from .ties import warn_on_ties

# Vertex of the exponent of the upper branch; past it the branch grows again.
_UPPER_BRANCH_VERTEX = 5.709 / (2 * 0.0186)


def anderson_darling_statistic(sample: Sample, model: FittedNormal) -> float:
    r"""Anderson-Darling distance over all ordered values, ties included.

    .. math::
        A^2 = -N - \sum_{k=1}^{N} \frac{2k - 1}{N}
        \left(\ln F(X_{(k)}) + \ln\left(1 - F(X_{(N+1-k)})\right)\right)

    Parameters
    ----------
    sample : Sample
        Observations.
    model : FittedNormal
        Theoretical distribution.

    Returns
    -------
    float
        A² statistic.

    Raises
    ------
    NumericalUnderflowError
        The model cdf rounds to 0 or 1 at some observation.
    """
    n = sample.n
    f = model.cdf(sample.values)

    outside = (f <= 0.0) | (f >= 1.0)
    if np.any(outside):
        raise NumericalUnderflowError(float(sample.values[outside][0]))

    k = np.arange(1, n + 1)
    terms = (2 * k - 1) * (np.log(f) + np.log1p(-f[::-1]))

    return float(-n - np.sum(terms) / n)


def anderson_darling_p_value(a2: float) -> float:
    r"""Piecewise p-value of A² for the normal case with estimated params.

    .. math::
        p = \begin{cases}
        1 - e^{-13.436 + 101.14 A - 223.73 A^2} & A < 0.2 \\
        1 - e^{-8.318 + 42.796 A - 59.938 A^2} & 0.2 \le A < 0.34 \\
        e^{0.9177 - 4.279 A - 1.38 A^2} & 0.34 \le A < 0.6 \\
        e^{1.2937 - 5.709 A + 0.0186 A^2} & A \ge 0.6
        \end{cases}

    Parameters
    ----------
    a2 : float
        Statistic, usually the corrected one.

    Returns
    -------
    float
        p-value in [0, 1].
    """
    a = a2
    if a < 0.2:
        p = 1.0 - np.exp(-13.436 + 101.14 * a - 223.73 * a**2)
    elif a < 0.34:
        p = 1.0 - np.exp(-8.318 + 42.796 * a - 59.938 * a**2)
    elif a < 0.6:
        p = np.exp(0.9177 - 4.279 * a - 1.38 * a**2)
    elif a < _UPPER_BRANCH_VERTEX:
        p = np.exp(1.2937 - 5.709 * a + 0.0186 * a**2)
    else:
        p = 0.0

    return float(np.clip(p, 0.0, 1.0))


def anderson_darling(
    sample: Sample, model: FittedNormal, alpha: float = 0.05
) -> TestResult:
    r"""Anderson-Darling normality test.

    The statistic is corrected for the sample size before looking up the
    primary ("corrected") p-value; the "uncorrected" p-value applies the
    same branches to the raw A².

    .. math::
        A_c^2 = A^2 \left(1 + \frac{0.75}{N} + \frac{2.25}{N^2}\right)
        \qquad
        Var(A^2) = \frac{2 (\pi^2 - 9)}{3} + \frac{10 - \pi^2}{N}

    Parameters
    ----------
    sample : Sample
        Observations.
    model : FittedNormal
        Theoretical distribution.
    alpha : float, optional
        Significance level, by default 0.05.

    Returns
    -------
    TestResult
        AndersonDarling result, with ``a2_corrected`` and ``variance`` in its
        metadata.
    """
    warn_on_ties(sample, TestName.ANDERSON_DARLING)

    n = sample.n
    a2 = anderson_darling_statistic(sample, model)
    a2_corrected = a2 * (1.0 + 0.75 / n + 2.25 / n**2)
    variance = 2.0 * (np.pi**2 - 9.0) / 3.0 + (10.0 - np.pi**2) / n

    return TestResult(
        test=TestName.ANDERSON_DARLING,
        statistic=a2,
        p_values=(
            ("corrected", anderson_darling_p_value(a2_corrected)),
            ("uncorrected", anderson_darling_p_value(a2)),
        ),
        alpha=alpha,
        metadata={"a2_corrected": a2_corrected, "variance": float(variance)},
    )
