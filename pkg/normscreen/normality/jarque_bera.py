"""Jarque-Bera statistic module."""
from normscreen.errors import TooFewObservationsError
from normscreen.sample import Sample
from normscreen.special import chi2_sf

from .result import TestName, TestResult

MIN_OBSERVATIONS = 4


def jarque_bera(sample: Sample, alpha: float = 0.05) -> TestResult:
    r"""Jarque-Bera test on sample skewness and excess kurtosis.

    .. math::
        JB = N \left(\frac{g_1^2}{6} + \frac{g_2^2}{24}\right)

    The p-value is the chi-squared survival with 2 degrees of freedom.

    Parameters
    ----------
    sample : Sample
        Observations, at least 4.
    alpha : float, optional
        Significance level, by default 0.05.

    Returns
    -------
    TestResult
        JarqueBera result with ``df = 2``.

    Raises
    ------
    TooFewObservationsError
        Fewer than 4 observations.
    DegenerateSampleError
        All observations are identical.
    """
    if sample.n < MIN_OBSERVATIONS:
        raise TooFewObservationsError(
            f"Jarque-Bera needs at least {MIN_OBSERVATIONS} observations, "
            f"got {sample.n}."
        )

    mom = sample.moments
    jb = sample.n * (mom.g1**2 / 6.0 + mom.g2**2 / 24.0)

    return TestResult(
        test=TestName.JARQUE_BERA,
        statistic=float(jb),
        p_values=(("chi2", chi2_sf(jb, 2)),),
        alpha=alpha,
        df=2,
        metadata={"g1": mom.g1, "g2": mom.g2},
    )
