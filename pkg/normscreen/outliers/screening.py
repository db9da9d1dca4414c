"""Iterative outlier screening module.

Detect the most extreme observation with a two-sided Grubbs test, remove it
when significant, refit the normal model and run the normality battery
again.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Optional, Tuple, Union

from normscreen.binning import BinningRule
from normscreen.normality import TestName, TestResult, run_battery
from normscreen.sample import FittedNormal, Sample, fit_normal

from .grubbs import GrubbsResult, GrubbsVariant, grubbs

logger = logging.getLogger(__name__)

DEFAULT_MAX_ITER = 5


class StopReason(Enum):
    """Why the screening loop ended."""

    NO_OUTLIER = "no-outlier"
    MAX_ITERATIONS = "max-iterations"
    TOO_FEW_POINTS = "too-few-points"
    DEGENERATE_SAMPLE = "degenerate-sample"


@dataclass(frozen=True)
class ScreeningIteration:
    """One removal of the screening loop.

    Parameters
    ----------
    removed_value : float
        Observation removed in this iteration.
    grubbs : GrubbsResult
        Test that flagged it.
    model : Optional[FittedNormal]
        Model refitted on the remaining observations, None when they have
        no spread.
    battery : Tuple[TestResult, ...]
        Battery run on the remaining observations.
    n : int
        Remaining observations.
    """

    removed_value: float
    grubbs: GrubbsResult
    model: Optional[FittedNormal]
    battery: Tuple[TestResult, ...]
    n: int


@dataclass(frozen=True)
class ScreeningHistory:
    """Full record of a screening run.

    Parameters
    ----------
    iterations : Tuple[ScreeningIteration, ...]
        Removals in order. Empty when nothing was removed.
    final_sample : Sample
        Observations left after the last removal.
    stop_reason : StopReason
        Why the loop ended.
    final_grubbs : Optional[GrubbsResult]
        Last Grubbs check, the one that did not flag anything. None when the
        loop stopped for another reason.
    """

    iterations: Tuple[ScreeningIteration, ...]
    final_sample: Sample
    stop_reason: StopReason
    final_grubbs: Optional[GrubbsResult] = None

    @property
    def removed_values(self) -> List[float]:
        """Removed observations in removal order."""
        return [it.removed_value for it in self.iterations]

    @property
    def final_battery(self) -> Optional[Tuple[TestResult, ...]]:
        """Battery of the last iteration, None without removals."""
        if not self.iterations:
            return None
        return self.iterations[-1].battery


def screen(
    sample: Sample,
    alpha: float = 0.05,
    max_iter: int = DEFAULT_MAX_ITER,
    rule: Union[BinningRule, str] = BinningRule.HARTLEY_EQUAL_WIDTH,
    model: Optional[FittedNormal] = None,
    extended: bool = False,
    tests: Optional[Iterable[Union[TestName, str]]] = None,
) -> ScreeningHistory:
    """Detect, remove and retest outliers one at a time.

    Each iteration runs a two-sided Grubbs test; when its p-value is below
    ``alpha`` the suspect is removed, the normal model is refitted and the
    battery runs again on the remaining data. The loop ends when nothing is
    flagged, fewer than 4 observations remain, the remaining data have no
    spread, or ``max_iter`` removals were made.

    Parameters
    ----------
    sample : Sample
        Observations.
    alpha : float, optional
        Significance level in (0, 0.5], by default 0.05.
    max_iter : int, optional
        Maximum number of removals, by default 5.
    rule : Union[BinningRule, str], optional
        Frequency class rule of the chi-squared test.
    model : Optional[FittedNormal], optional
        External model kept across iterations. By default the model is
        refitted on the remaining data after every removal.
    extended : bool, optional
        Run the extended battery, by default False.
    tests : Optional[Iterable[Union[TestName, str]]], optional
        Explicit subset of tests.

    Returns
    -------
    ScreeningHistory
        Removals, final sample and stop reason.
    """
    if not 0 < alpha <= 0.5:
        raise ValueError(f"alpha must be in (0, 0.5], got {alpha}.")
    if max_iter < 1:
        raise ValueError(f"max_iter must be at least 1, got {max_iter}.")

    tests = None if tests is None else list(tests)
    current = sample
    iterations: List[ScreeningIteration] = []
    final_grubbs = None

    while True:
        if current.n < 4:
            reason = StopReason.TOO_FEW_POINTS
            break
        if len(iterations) >= max_iter:
            reason = StopReason.MAX_ITERATIONS
            break

        check = grubbs(current, GrubbsVariant.TWO_SIDED)

        if not check.flags(alpha):
            final_grubbs = check
            reason = StopReason.NO_OUTLIER
            logger.info(
                "'%s': no outlier (G = %.4f, p = %.4g).",
                current.label,
                check.g,
                check.p,
            )
            break

        current = current.without(check.suspect_index)
        logger.info(
            "'%s': removed %g (G = %.4f, p = %.4g), %d observations left.",
            current.label,
            check.suspect_value,
            check.g,
            check.p,
            current.n,
        )

        if current.min_value == current.max_value:
            iterations.append(
                ScreeningIteration(
                    removed_value=check.suspect_value,
                    grubbs=check,
                    model=None,
                    battery=(),
                    n=current.n,
                )
            )
            reason = StopReason.DEGENERATE_SAMPLE
            break

        fitted = model if model is not None else fit_normal(current)
        battery = run_battery(current, fitted, rule, alpha, extended, tests)

        iterations.append(
            ScreeningIteration(
                removed_value=check.suspect_value,
                grubbs=check,
                model=fitted,
                battery=tuple(battery),
                n=current.n,
            )
        )

    return ScreeningHistory(
        iterations=tuple(iterations),
        final_sample=current,
        stop_reason=reason,
        final_grubbs=final_grubbs,
    )
