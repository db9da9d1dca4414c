"""Grubbs outlier test module."""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Union

from normscreen.errors import TooFewObservationsError
from normscreen.sample import Sample
from normscreen.special import TailKind, student_t_tail

import numpy as np

logger = logging.getLogger(__name__)

MIN_OBSERVATIONS = 4


class GrubbsVariant(Enum):
    """Which extreme is tested."""

    MIN = "min"
    MAX = "max"
    TWO_SIDED = "two-sided"


@dataclass(frozen=True)
class GrubbsResult:
    """Outcome of a Grubbs test.

    Parameters
    ----------
    variant : GrubbsVariant
        Tested extreme.
    g : float
        Grubbs statistic.
    p : float
        p-value from the linear t transform.
    p_exact : float
        p-value from the exact inversion of the G to t relation.
    t : float
        Student t of the linear transform.
    t_exact : float
        Student t of the exact inversion, ``inf`` outside its domain.
    suspect_value : float
        Most extreme observation.
    suspect_index : int
        Position of the suspect in the sorted sample.
    n : int
        Sample size.
    """

    variant: GrubbsVariant
    g: float
    p: float
    p_exact: float
    t: float
    t_exact: float
    suspect_value: float
    suspect_index: int
    n: int

    def flags(self, alpha: float) -> bool:
        """Whether the suspect is an outlier at significance ``alpha``."""
        return self.p < alpha


def _deviations(sample: Sample):
    mom = sample.moments
    g_min = (mom.mean - sample.min_value) / mom.s
    g_max = (sample.max_value - mom.mean) / mom.s
    return g_min, g_max


def grubbs(
    sample: Sample,
    variant: Union[GrubbsVariant, str] = GrubbsVariant.TWO_SIDED,
) -> GrubbsResult:
    r"""Grubbs test for a single outlier.

    .. math::
        G_{min} = \frac{\bar{X} - \min X}{s} \qquad
        G_{max} = \frac{\max X - \bar{X}}{s} \qquad
        G = \max(G_{min}, G_{max})

    The statistic is referred to a Student t with :math:`N - 2` degrees of
    freedom in two ways:

    .. math::
        t = G \frac{\sqrt{N (N - 2)}}{N - 1} \qquad
        t_{exact} = \sqrt{\frac{N (N - 2) G^2}{(N - 1)^2 - N G^2}}

    With the linear transform the one-sided p-value is
    :math:`2 N p_t(t)` and the two-sided one :math:`N p_{t,2}(t)`. With the
    exact inversion they are :math:`N p_t(t_{exact})` and
    :math:`2 N p_t(t_{exact})`. Both are clamped to [0, 1]. On a tie between
    both extremes the two-sided test picks the maximum.

    Parameters
    ----------
    sample : Sample
        Observations, at least 4.
    variant : Union[GrubbsVariant, str], optional
        Tested extreme, by default two-sided. Options available: "min",
        "max", "two-sided".

    Returns
    -------
    GrubbsResult
        Statistic, suspect and p-values.

    Raises
    ------
    TooFewObservationsError
        Fewer than 4 observations.
    DegenerateSampleError
        All observations are identical.
    """
    variant = GrubbsVariant(variant)
    n = sample.n

    if n < MIN_OBSERVATIONS:
        raise TooFewObservationsError(
            f"Grubbs needs at least {MIN_OBSERVATIONS} observations, got {n}."
        )

    g_min, g_max = _deviations(sample)

    if variant is GrubbsVariant.MIN or (
        variant is GrubbsVariant.TWO_SIDED and g_min > g_max
    ):
        g, index = g_min, 0
    else:
        g, index = g_max, n - 1

    df = n - 2
    t = g * np.sqrt(n * (n - 2)) / (n - 1)
    one_sided = student_t_tail(t, df, TailKind.UPPER)

    if variant is GrubbsVariant.TWO_SIDED:
        p = n * student_t_tail(t, df, TailKind.TWO_SIDED)
    else:
        p = 2 * n * one_sided

    denominator = (n - 1) ** 2 - n * g * g
    if denominator <= 0:
        logger.warning(
            "Grubbs G = %g is outside the domain of the exact inversion "
            "(n = %d), exact p set to 0.",
            g,
            n,
        )
        t_exact, p_exact = np.inf, 0.0
    else:
        t_exact = np.sqrt(n * (n - 2) * g * g / denominator)
        multiplier = 2 * n if variant is GrubbsVariant.TWO_SIDED else n
        p_exact = multiplier * student_t_tail(t_exact, df, TailKind.UPPER)

    return GrubbsResult(
        variant=variant,
        g=float(g),
        p=float(min(max(p, 0.0), 1.0)),
        p_exact=float(min(max(p_exact, 0.0), 1.0)),
        t=float(t),
        t_exact=float(t_exact),
        suspect_value=float(sample.values[index]),
        suspect_index=index,
        n=n,
    )
