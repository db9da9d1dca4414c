"""Dataplot class-width rule."""
from typing import TYPE_CHECKING

import numpy as np
from numpy.typing import NDArray

if TYPE_CHECKING:
    from normscreen.sample import FittedNormal, Sample

WIDTH_IN_SD = 0.3
SPAN_IN_SD = 6.0


def dataplot_width(
    sample: "Sample", model: "FittedNormal"
) -> NDArray[np.float64]:
    r"""Interior edges of fixed-width classes centered on the sample mean.

    Classes are :math:`0.3 s` wide and their centers run from
    :math:`\bar{X} - 6 s` to :math:`\bar{X} + 6 s`, where :math:`s` is the
    sample standard deviation. Empty marginal classes are dropped by the
    caller after counting.

    Parameters
    ----------
    sample : Sample
        Observations.
    model : FittedNormal
        Theoretical distribution (unused, kept for a uniform rule
        signature).

    Returns
    -------
    NDArray[np.float64]
        Increasing interior edges (40 of them, 41 classes).
    """
    mom = sample.moments
    width = WIDTH_IN_SD * mom.s
    half_count = int(round(SPAN_IN_SD / WIDTH_IN_SD))

    # centers at mean + j * width, j = -half_count..half_count
    offsets = np.arange(-half_count, half_count) + 0.5

    return mom.mean + offsets * width
