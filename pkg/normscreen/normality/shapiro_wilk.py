"""Wilks-Shapiro statistic module."""
from normscreen.errors import DegenerateSampleError, SampleSizeOutOfRangeError
from normscreen.sample import Sample

from scipy import stats

from .result import TestName, TestResult

MIN_OBSERVATIONS = 3
MAX_OBSERVATIONS = 5000


def wilks_shapiro(sample: Sample, alpha: float = 0.05) -> TestResult:
    """Wilks-Shapiro W test with Royston's approximations.

    The weights and the normalizing transform of W come from the AS R94
    algorithm as implemented by :func:`scipy.stats.shapiro`.

    Parameters
    ----------
    sample : Sample
        Observations, between 3 and 5000 of them.
    alpha : float, optional
        Significance level, by default 0.05.

    Returns
    -------
    TestResult
        WilksShapiro result.

    Raises
    ------
    SampleSizeOutOfRangeError
        The sample size is outside the validity range of the algorithm.
    DegenerateSampleError
        All observations are identical.
    """
    n = sample.n

    if not MIN_OBSERVATIONS <= n <= MAX_OBSERVATIONS:
        raise SampleSizeOutOfRangeError(
            f"Wilks-Shapiro needs {MIN_OBSERVATIONS} to {MAX_OBSERVATIONS} "
            f"observations, got {n}."
        )
    if sample.min_value == sample.max_value:
        raise DegenerateSampleError("Wilks-Shapiro needs a data range.")

    result = stats.shapiro(sample.values)

    return TestResult(
        test=TestName.WILKS_SHAPIRO,
        statistic=float(result.statistic),
        p_values=(("royston", float(min(max(result.pvalue, 0.0), 1.0))),),
        alpha=alpha,
    )
