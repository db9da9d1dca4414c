"""Tied values check for EDF statistics."""
import logging

from normscreen.sample import Sample

from .result import TestName

logger = logging.getLogger(__name__)

TIES_WARNING_FRACTION = 0.1


def warn_on_ties(sample: Sample, test: TestName) -> bool:
    """Log a warning when ties exceed 10% of the observations.

    EDF statistics assume a continuous distribution, so heavily tied data
    distort them.

    Parameters
    ----------
    sample : Sample
        Observations.
    test : TestName
        Statistic being computed.

    Returns
    -------
    bool
        True if the warning was issued.
    """
    fraction = sample.ties_fraction

    if fraction > TIES_WARNING_FRACTION:
        logger.warning(
            "%s: %.1f%% of '%s' are tied values, the statistic is affected "
            "by ties.",
            test.label,
            100 * fraction,
            sample.label,
        )
        return True
    return False
