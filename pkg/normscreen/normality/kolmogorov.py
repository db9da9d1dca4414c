"""Kolmogorov-Smirnov and Kuiper statistics module."""
import logging
from typing import List

from normscreen.errors import DomainError
from normscreen.sample import FittedNormal, Sample

import numpy as np

from .result import KSDecomposition, TestName, TestResult
from .ties import warn_on_ties

logger = logging.getLogger(__name__)

SERIES_TOLERANCE = 1e-12
MAX_TERMS = 1000

# Below this K the alternating series converges slowly; the theta form is
# used instead.
THETA_SWITCH = 0.3

# Below this lambda the Kuiper series is not useful and p is taken as 1.
KUIPER_MIN_LAMBDA = 0.4


def ks_statistics(sample: Sample, model: FittedNormal) -> KSDecomposition:
    r"""One-sided distances between the ECDF and the model cdf.

    .. math::
        D^+ = \max_i \left(\frac{i}{N} - F(X_{(i)})\right) \qquad
        D^- = \max_i \left(F(X_{(i)}) - \frac{i - 1}{N}\right)

    Both sides of every ECDF step are examined. Tied values run through
    consecutive ``i`` so the maxima pick the full jump of a tied group.

    Parameters
    ----------
    sample : Sample
        Observations.
    model : FittedNormal
        Theoretical distribution.

    Returns
    -------
    KSDecomposition
        D-, D+ and the derived D and V.
    """
    n = sample.n
    f = model.cdf(sample.values)
    i = np.arange(1, n + 1)

    d_plus = float(np.max(i / n - f))
    d_minus = float(np.max(f - (i - 1) / n))

    return KSDecomposition(d_minus=max(d_minus, 0.0), d_plus=max(d_plus, 0.0))


def kolmogorov_sf(k: float) -> float:
    r"""Survival function of the Kolmogorov distribution.

    .. math::
        P(K > x) = 2 \sum_{i=1}^{\infty} (-1)^{i-1} e^{-2 i^2 x^2}

    Terms are added until their magnitude drops below 1e-12. For
    ``x < 0.3`` the dual theta series of :func:`kolmogorov_sf_theta` is
    evaluated instead.

    Parameters
    ----------
    k : float
        Scaled distance.

    Returns
    -------
    float
        Survival probability in [0, 1].
    """
    if k <= 0:
        return 1.0
    if k < THETA_SWITCH:
        return kolmogorov_sf_theta(k)

    total = 0.0
    for i in range(1, MAX_TERMS + 1):
        term = 2.0 * (-1) ** (i - 1) * np.exp(-2.0 * i * i * k * k)
        total += term
        if abs(term) < SERIES_TOLERANCE:
            break

    logger.debug("kolmogorov_sf(%g): %d terms", k, i)

    return float(np.clip(total, 0.0, 1.0))


def kolmogorov_sf_theta(k: float) -> float:
    r"""Survival function of the Kolmogorov distribution by theta series.

    .. math::
        P(K \le x) = \frac{\sqrt{2 \pi}}{x}
        \sum_{i=1}^{\infty} e^{-(2i - 1)^2 \pi^2 / (8 x^2)}

    Parameters
    ----------
    k : float
        Scaled distance.

    Returns
    -------
    float
        Survival probability ``1 - P(K <= k)`` in [0, 1].
    """
    if k <= 0:
        return 1.0

    factor = -(np.pi**2) / (8.0 * k * k)
    total = 0.0
    for i in range(1, MAX_TERMS + 1):
        term = np.exp(factor * (2 * i - 1) ** 2)
        total += term
        if term < SERIES_TOLERANCE:
            break

    cdf = np.sqrt(2.0 * np.pi) / k * total

    return float(np.clip(1.0 - cdf, 0.0, 1.0))


def _check_distance(d: float, n: int, upper: float) -> None:
    if not 0.0 <= d <= upper:
        raise DomainError(f"Distance must be in [0, {upper}], got {d}.")
    if n < 1:
        raise DomainError(f"Sample size must be positive, got {n}.")


def ks_p_value(d: float, n: int, finite_n_correction: bool = False) -> float:
    r"""Probability of observing a larger two-sided KS distance.

    .. math::
        K = D \sqrt{N} \qquad
        K_c = D \left(\sqrt{N} + 0.12 + \frac{0.11}{\sqrt{N}}\right)

    Parameters
    ----------
    d : float
        Two-sided distance in [0, 1].
    n : int
        Sample size.
    finite_n_correction : bool, optional
        Scale the distance by the finite sample correction, by default
        False.

    Returns
    -------
    float
        p-value in [0, 1].
    """
    _check_distance(d, n, 1.0)
    root = np.sqrt(n)

    if finite_n_correction:
        k = d * (root + 0.12 + 0.11 / root)
    else:
        k = d * root

    return kolmogorov_sf(k)


def smirnov_p_value(d: float, n: int) -> float:
    r"""Asymptotic one-sided tail :math:`e^{-2 N D^2}`."""
    _check_distance(d, n, 1.0)
    return float(np.clip(np.exp(-2.0 * n * d * d), 0.0, 1.0))


def kuiper_p_value(v: float, n: int) -> float:
    r"""Probability of observing a larger Kuiper statistic.

    .. math::
        \lambda = V \left(\sqrt{N} + 0.155 + \frac{0.24}{\sqrt{N}}\right)
        \qquad Q(\lambda) = 2 \sum_{i=1}^{\infty} (4 i^2 \lambda^2 - 1)
        e^{-2 i^2 \lambda^2}

    Parameters
    ----------
    v : float
        Kuiper statistic in [0, 2].
    n : int
        Sample size.

    Returns
    -------
    float
        p-value in [0, 1]; 1 when :math:`\lambda < 0.4`.
    """
    _check_distance(v, n, 2.0)
    root = np.sqrt(n)
    lam = v * (root + 0.155 + 0.24 / root)

    if lam < KUIPER_MIN_LAMBDA:
        return 1.0

    total = 0.0
    for i in range(1, MAX_TERMS + 1):
        a = 2.0 * i * i * lam * lam
        term = 2.0 * (2.0 * a - 1.0) * np.exp(-a)
        total += term
        if abs(term) < SERIES_TOLERANCE:
            break

    return float(np.clip(total, 0.0, 1.0))


def kolmogorov_smirnov(
    sample: Sample, model: FittedNormal, alpha: float = 0.05
) -> TestResult:
    """Two-sided Kolmogorov-Smirnov test.

    The primary p-value uses the finite sample correction ("stephens"), the
    secondary one the plain asymptotic scaling ("asymptotic").

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
        KS_D result.
    """
    warn_on_ties(sample, TestName.KS_D)
    ks = ks_statistics(sample, model)

    return TestResult(
        test=TestName.KS_D,
        statistic=ks.d,
        p_values=(
            ("stephens", ks_p_value(ks.d, sample.n, True)),
            ("asymptotic", ks_p_value(ks.d, sample.n, False)),
        ),
        alpha=alpha,
        metadata={"d_minus": ks.d_minus, "d_plus": ks.d_plus},
    )


def kolmogorov_smirnov_one_sided(
    sample: Sample, model: FittedNormal, alpha: float = 0.05
) -> List[TestResult]:
    """One-sided D- and D+ tests, in that order."""
    ks = ks_statistics(sample, model)

    return [
        TestResult(
            test=test,
            statistic=d,
            p_values=(("asymptotic", smirnov_p_value(d, sample.n)),),
            alpha=alpha,
        )
        for test, d in (
            (TestName.KS_D_MINUS, ks.d_minus),
            (TestName.KS_D_PLUS, ks.d_plus),
        )
    ]


def kuiper(
    sample: Sample, model: FittedNormal, alpha: float = 0.05
) -> TestResult:
    """Kuiper test on ``V = D- + D+``."""
    warn_on_ties(sample, TestName.KUIPER_V)
    ks = ks_statistics(sample, model)

    return TestResult(
        test=TestName.KUIPER_V,
        statistic=ks.v,
        p_values=(("asymptotic", kuiper_p_value(ks.v, sample.n)),),
        alpha=alpha,
    )
