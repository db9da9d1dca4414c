"""Frequency classes module.

Groups a sample into classes with observed and expected counts for the
chi-squared test and the histogram emitter.
"""
import logging
from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable, Dict, Tuple, Union

from normscreen.errors import DegenerateBinningError
from normscreen.sample import FittedNormal, Sample

import numpy as np
from numpy.typing import NDArray

from .class_rules import (
    dataplot_width,
    hartley_equal_probability,
    hartley_equal_width,
)

logger = logging.getLogger(__name__)

MIN_OBSERVED = 5


class BinningRule(Enum):
    """Frequency class construction rules."""

    HARTLEY_EQUAL_PROBABILITY = "hartley-eqprob"
    HARTLEY_EQUAL_WIDTH = "hartley-eqwidth"
    DATAPLOT_WIDTH = "dataplot"


_RULE_FUNCTIONS: Dict[BinningRule, Callable] = {
    BinningRule.HARTLEY_EQUAL_PROBABILITY: hartley_equal_probability,
    BinningRule.HARTLEY_EQUAL_WIDTH: hartley_equal_width,
    BinningRule.DATAPLOT_WIDTH: dataplot_width,
}


@dataclass(frozen=True, eq=False)
class FrequencyClasses:
    """Frequency classes with observed and expected counts.

    Class ``i`` is the half-open interval ``[edges[i], edges[i + 1])``. The
    outermost edges are ``-inf`` and ``+inf`` so the expected counts add up
    to the sample size.

    Parameters
    ----------
    edges : NDArray[np.float64]
        ``k + 1`` strictly increasing edges.
    observed : NDArray[np.int64]
        Observed count per class.
    expected : NDArray[np.float64]
        Expected count per class under the model.
    rule : BinningRule
        Rule that produced the classes.
    merged : bool
        Whether small classes were merged.
    """

    edges: NDArray[np.float64]
    observed: NDArray[np.int64]
    expected: NDArray[np.float64]
    rule: BinningRule
    merged: bool = False

    def __post_init__(self) -> None:
        if np.size(self.edges) != np.size(self.observed) + 1:
            raise ValueError("k classes need k + 1 edges.")
        if np.size(self.observed) != np.size(self.expected):
            raise ValueError("observed and expected must have equal sizes.")

    @property
    def k(self) -> int:
        """Number of classes."""
        return int(np.size(self.observed))

    @property
    def n(self) -> int:
        """Number of classified observations."""
        return int(np.sum(self.observed))

    def __len__(self) -> int:
        """Count of classes."""
        return self.k


def _drop_empty_margins(
    edges: NDArray[np.float64],
    observed: NDArray[np.int64],
    expected: NDArray[np.float64],
) -> Tuple[NDArray, NDArray, NDArray]:
    """Fold empty marginal classes into their inner neighbours.

    The surviving outer classes become open-ended, so the expected counts
    keep adding up to the sample size.
    """
    edges, observed, expected = list(edges), list(observed), list(expected)

    while len(observed) > 1 and observed[0] == 0:
        folded = expected.pop(0)
        expected[0] += folded
        observed.pop(0)
        edges.pop(1)

    while len(observed) > 1 and observed[-1] == 0:
        folded = expected.pop()
        expected[-1] += folded
        observed.pop()
        edges.pop(-2)

    return np.array(edges), np.array(observed), np.array(expected)


def build_classes(
    sample: Sample,
    model: FittedNormal,
    rule: Union[BinningRule, str] = BinningRule.HARTLEY_EQUAL_WIDTH,
) -> FrequencyClasses:
    r"""Group a sample into frequency classes.

    .. math::
        E_i = N \left(F(e_{i+1}) - F(e_i)\right)

    | :math:`E_i`: expected count of the :math:`i`-th class.
    | :math:`F`: model cumulative distribution.
    | :math:`e_i`: class edges, with open-ended outer classes.

    Observations equal to an interior edge belong to the upper class. After
    counting, adjacent classes are merged until every class holds at least
    five observations.

    Parameters
    ----------
    sample : Sample
        Observations.
    model : FittedNormal
        Theoretical distribution.
    rule : Union[BinningRule, str], optional
        Class construction rule, by default Hartley equal width. Options
        available: "hartley-eqprob", "hartley-eqwidth", "dataplot".

    Returns
    -------
    FrequencyClasses
        Merged classes.

    Raises
    ------
    DegenerateBinningError
        Fewer than two classes survive merging.
    """
    rule = BinningRule(rule)

    interior = np.asarray(_RULE_FUNCTIONS[rule](sample, model))
    edges = np.concatenate(([-np.inf], interior, [np.inf]))

    membership = np.searchsorted(interior, sample.values, side="right")
    observed = np.bincount(membership, minlength=np.size(interior) + 1)
    expected = sample.n * np.diff(model.cdf(edges))

    if rule is BinningRule.DATAPLOT_WIDTH:
        edges, observed, expected = _drop_empty_margins(
            edges, observed, expected
        )

    logger.debug(
        "%s: %d classes before merging, observed=%s",
        rule.value,
        np.size(observed),
        observed.tolist(),
    )

    classes = FrequencyClasses(
        edges=edges, observed=observed, expected=expected, rule=rule
    )

    return merge_small_classes(classes)


def merge_small_classes(classes: FrequencyClasses) -> FrequencyClasses:
    """Merge classes observing fewer than five values.

    Greedy, left to right: a class with fewer than five observations is
    joined to its right neighbour; the last class is joined to its left
    neighbour. Counts and expectations add up. Conforming input is returned
    unchanged.

    Parameters
    ----------
    classes : FrequencyClasses
        Classes to merge.

    Returns
    -------
    FrequencyClasses
        Classes with at least five observations each.

    Raises
    ------
    DegenerateBinningError
        Fewer than two classes are given or survive merging.
    """
    if classes.k < 2:
        raise DegenerateBinningError(
            f"At least 2 classes are needed, got {classes.k}."
        )

    edges = list(classes.edges)
    observed = list(classes.observed)
    expected = list(classes.expected)
    changed = False

    i = 0
    while i < len(observed) - 1:
        if observed[i] < MIN_OBSERVED:
            small_observed, small_expected = observed.pop(i), expected.pop(i)
            observed[i] += small_observed
            expected[i] += small_expected
            edges.pop(i + 1)
            changed = True
        else:
            i += 1

    if len(observed) > 1 and observed[-1] < MIN_OBSERVED:
        small_observed, small_expected = observed.pop(), expected.pop()
        observed[-1] += small_observed
        expected[-1] += small_expected
        edges.pop(-2)
        changed = True

    if len(observed) < 2 or observed[-1] < MIN_OBSERVED:
        raise DegenerateBinningError(
            f"Merging left {len(observed)} class(es) with observed "
            f"{observed}; the chi-squared test needs at least 2 classes of "
            f"{MIN_OBSERVED} or more observations."
        )

    if not changed:
        return classes

    logger.debug("merged classes: observed=%s", observed)

    return replace(
        classes,
        edges=np.array(edges, dtype=np.float64),
        observed=np.array(observed, dtype=np.int64),
        expected=np.array(expected, dtype=np.float64),
        merged=True,
    )
