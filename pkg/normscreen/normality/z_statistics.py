"""Z-based moment statistics module.

Each statistic is referred to the standard normal distribution and its
p-value is two-sided. The mean, variance and standard deviation statistics
compare the sample with the model parameters; against a model fitted to the
same sample they are tautological and flagged as self-referential.
"""
from typing import List

from normscreen.errors import DegenerateSampleError, TooFewObservationsError
from normscreen.sample import FittedNormal, Sample
from normscreen.special import TailKind, ln_gamma, normal_tail

import numpy as np

from .result import TestName, TestResult

MIN_OBSERVATIONS = 5


def _check_size(sample: Sample) -> None:
    if sample.n < MIN_OBSERVATIONS:
        raise TooFewObservationsError(
            f"Z statistics need at least {MIN_OBSERVATIONS} observations, "
            f"got {sample.n}."
        )


def _z_result(
    test: TestName, z: float, alpha: float, self_referential: bool = False
) -> TestResult:
    return TestResult(
        test=test,
        statistic=float(z),
        p_values=(("normal", normal_tail(z, TailKind.TWO_SIDED)),),
        alpha=alpha,
        self_referential=self_referential,
    )


def c4(n: int) -> float:
    r"""Unbiasing constant of the sample standard deviation.

    .. math::
        c_4 = \frac{\Gamma(n/2)}{\Gamma((n-1)/2)} \sqrt{\frac{2}{n-1}}
    """
    return float(
        np.exp(ln_gamma(n / 2.0) - ln_gamma((n - 1) / 2.0))
        * np.sqrt(2.0 / (n - 1))
    )


def z_mean(
    sample: Sample, model: FittedNormal, alpha: float = 0.05
) -> TestResult:
    r"""Mean statistic :math:`(\bar{X} - \mu) \sqrt{N} / s`."""
    _check_size(sample)
    mom = sample.moments
    z = (mom.mean - model.mu) * np.sqrt(sample.n) / mom.s

    return _z_result(TestName.Z_MEAN, z, alpha, model.is_plug_in_for(sample))


def z_variance(
    sample: Sample, model: FittedNormal, alpha: float = 0.05
) -> TestResult:
    r"""Variance statistic.

    .. math::
        z = N \frac{(N - 1) s^2 - \sigma^2 N}
        {\sqrt{(N - 1)^3 m_4 - (N - 3) m_2^2}}
    """
    _check_size(sample)
    n = sample.n
    mom = sample.moments

    radicand = (n - 1) ** 3 * mom.m4 - (n - 3) * mom.m2**2
    if radicand <= 0:
        raise DegenerateSampleError("Variance statistic is undefined.")

    z = n * ((n - 1) * mom.s**2 - model.sigma**2 * n) / np.sqrt(radicand)

    return _z_result(
        TestName.Z_VARIANCE, z, alpha, model.is_plug_in_for(sample)
    )


def z_std_dev(
    sample: Sample, model: FittedNormal, alpha: float = 0.05
) -> TestResult:
    r"""Standard deviation statistic.

    .. math::
        z = \frac{c_4 s / \sigma - 1}{\sqrt{1 - c_4^2}}
    """
    _check_size(sample)
    c = c4(sample.n)
    z = (c * sample.moments.s / model.sigma - 1.0) / np.sqrt(1.0 - c * c)

    return _z_result(
        TestName.Z_STD_DEV, z, alpha, model.is_plug_in_for(sample)
    )


def z_skewness(sample: Sample, alpha: float = 0.05) -> TestResult:
    r"""Skewness statistic.

    .. math::
        z = g_1 \sqrt{\frac{(N + 1)(N + 3)}{6 (N - 2)}}

    Parameters
    ----------
    sample : Sample
        Observations, at least 5.
    alpha : float, optional
        Significance level, by default 0.05.

    Returns
    -------
    TestResult
        ZSkewness result.
    """
    _check_size(sample)
    n = sample.n
    z = sample.moments.g1 * np.sqrt((n + 1) * (n + 3) / (6.0 * (n - 2)))

    return _z_result(TestName.Z_SKEWNESS, z, alpha)


def z_kurtosis(sample: Sample, alpha: float = 0.05) -> TestResult:
    r"""Kurtosis statistic.

    .. math::
        z = \left(\frac{N + 1}{N - 1} b_2 - 3\right)
        \sqrt{\frac{(N + 3)(N + 5)(N - 1)^2}{24 N (N - 2)(N - 3)}}

    | :math:`b_2 = m_4 / m_2^2`: kurtosis ratio (not the excess).

    Parameters
    ----------
    sample : Sample
        Observations, at least 5.
    alpha : float, optional
        Significance level, by default 0.05.

    Returns
    -------
    TestResult
        ZKurtosis result.
    """
    _check_size(sample)
    n = sample.n
    b2 = sample.moments.b2
    scale = np.sqrt(
        (n + 3) * (n + 5) * (n - 1) ** 2 / (24.0 * n * (n - 2) * (n - 3))
    )
    z = ((n + 1) / (n - 1) * b2 - 3.0) * scale

    return _z_result(TestName.Z_KURTOSIS, z, alpha)


def z_statistics(
    sample: Sample, model: FittedNormal, alpha: float = 0.05
) -> List[TestResult]:
    """All five z statistics.

    Parameters
    ----------
    sample : Sample
        Observations, at least 5.
    model : FittedNormal
        Theoretical distribution.
    alpha : float, optional
        Significance level, by default 0.05.

    Returns
    -------
    List[TestResult]
        Mean, variance, standard deviation, skewness and kurtosis results.
    """
    return [
        z_mean(sample, model, alpha),
        z_variance(sample, model, alpha),
        z_std_dev(sample, model, alpha),
        z_skewness(sample, alpha),
        z_kurtosis(sample, alpha),
    ]
