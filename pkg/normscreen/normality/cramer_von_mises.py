"""Cramer-von Mises statistic module."""
from normscreen.sample import FittedNormal, Sample

import numpy as np

from .result import TestName, TestResult
from .ties import warn_on_ties


def cramer_von_mises_statistic(sample: Sample, model: FittedNormal) -> float:
    r"""Cramer-von Mises distance.

    .. math::
        W^2 = \frac{1}{12 N} + \sum_{i=1}^{N}
        \left(\frac{2i - 1}{2N} - F(X_{(i)})\right)^2
    """
    n = sample.n
    f = model.cdf(sample.values)
    plotting = (2 * np.arange(1, n + 1) - 1) / (2 * n)

    return float(1.0 / (12 * n) + np.sum((plotting - f) ** 2))


def cramer_von_mises_p_value(w2: float) -> float:
    r"""Approximate p-value :math:`\min(1, 0.67 e^{-5.6 W^2})`."""
    return float(np.clip(0.67 * np.exp(-5.6 * w2), 0.0, 1.0))


def cramer_von_mises(
    sample: Sample, model: FittedNormal, alpha: float = 0.05
) -> TestResult:
    """Cramer-von Mises goodness-of-fit test.

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
        CramerVonMises result.
    """
    warn_on_ties(sample, TestName.CRAMER_VON_MISES)
    w2 = cramer_von_mises_statistic(sample, model)

    return TestResult(
        test=TestName.CRAMER_VON_MISES,
        statistic=w2,
        p_values=(("levin", cramer_von_mises_p_value(w2)),),
        alpha=alpha,
    )
