"""Normality battery module."""
import logging
from typing import Callable, Dict, Iterable, List, Optional, Union

from normscreen.binning import BinningRule, build_classes
from normscreen.errors import NormScreenError
from normscreen.sample import FittedNormal, Sample

from .anderson_darling import anderson_darling
from .chi_squared import chi_squared_test
from .cramer_von_mises import cramer_von_mises
from .jarque_bera import jarque_bera
from .kolmogorov import (
    kolmogorov_smirnov,
    kolmogorov_smirnov_one_sided,
    kuiper,
)
from .result import TestName, TestResult
from .shapiro_wilk import wilks_shapiro
from .z_statistics import (
    z_kurtosis,
    z_mean,
    z_skewness,
    z_std_dev,
    z_variance,
)

logger = logging.getLogger(__name__)

DEFAULT_TESTS = (
    TestName.KS_D,
    TestName.ANDERSON_DARLING,
    TestName.CHI_SQUARED,
    TestName.WILKS_SHAPIRO,
    TestName.Z_SKEWNESS,
    TestName.Z_KURTOSIS,
    TestName.JARQUE_BERA,
)

EXTENDED_TESTS = (
    TestName.KS_D_MINUS,
    TestName.KS_D_PLUS,
    TestName.KUIPER_V,
    TestName.CRAMER_VON_MISES,
    TestName.Z_MEAN,
    TestName.Z_VARIANCE,
    TestName.Z_STD_DEV,
)

Slot = Callable[[Sample, FittedNormal, BinningRule, float], TestResult]


def _chi_squared(s, model, rule, alpha):
    # Parameters only count as estimated when the model is the plug-in fit.
    t_params = 2 if model.is_plug_in_for(s) else 0
    return chi_squared_test(build_classes(s, model, rule), t_params, alpha)


_SLOTS: Dict[TestName, Slot] = {
    TestName.KS_D: lambda s, m, r, a: kolmogorov_smirnov(s, m, a),
    TestName.ANDERSON_DARLING: lambda s, m, r, a: anderson_darling(s, m, a),
    TestName.CHI_SQUARED: _chi_squared,
    TestName.WILKS_SHAPIRO: lambda s, m, r, a: wilks_shapiro(s, a),
    TestName.Z_SKEWNESS: lambda s, m, r, a: z_skewness(s, a),
    TestName.Z_KURTOSIS: lambda s, m, r, a: z_kurtosis(s, a),
    TestName.JARQUE_BERA: lambda s, m, r, a: jarque_bera(s, a),
    TestName.KS_D_MINUS: (
        lambda s, m, r, a: kolmogorov_smirnov_one_sided(s, m, a)[0]
    ),
    TestName.KS_D_PLUS: (
        lambda s, m, r, a: kolmogorov_smirnov_one_sided(s, m, a)[1]
    ),
    TestName.KUIPER_V: lambda s, m, r, a: kuiper(s, m, a),
    TestName.CRAMER_VON_MISES: lambda s, m, r, a: cramer_von_mises(s, m, a),
    TestName.Z_MEAN: lambda s, m, r, a: z_mean(s, m, a),
    TestName.Z_VARIANCE: lambda s, m, r, a: z_variance(s, m, a),
    TestName.Z_STD_DEV: lambda s, m, r, a: z_std_dev(s, m, a),
}


def select_tests(
    extended: bool = False,
    tests: Optional[Iterable[Union[TestName, str]]] = None,
) -> List[TestName]:
    """Resolve the tests to run, in battery order.

    Parameters
    ----------
    extended : bool, optional
        Append the extended statistics to the default seven, by default
        False.
    tests : Optional[Iterable[Union[TestName, str]]], optional
        Explicit subset. Overrides ``extended`` when given.

    Returns
    -------
    List[TestName]
        Selected tests ordered as in the battery.

    Raises
    ------
    ValueError
        Unknown test name.
    """
    order = DEFAULT_TESTS + EXTENDED_TESTS

    if tests is None:
        return list(order if extended else DEFAULT_TESTS)

    wanted = {TestName(t) for t in tests}
    return [t for t in order if t in wanted]


def run_battery(
    sample: Sample,
    model: FittedNormal,
    rule: Union[BinningRule, str] = BinningRule.HARTLEY_EQUAL_WIDTH,
    alpha: float = 0.05,
    extended: bool = False,
    tests: Optional[Iterable[Union[TestName, str]]] = None,
) -> List[TestResult]:
    """Run the normality battery on a sample.

    By default the seven tests Kolmogorov-Smirnov, Anderson-Darling, chi
    squared, Wilks-Shapiro, z skewness, z kurtosis and Jarque-Bera are run
    in that order. A test that raises a :class:`NormScreenError` is recorded
    as a failed result in its slot and the battery goes on.

    Parameters
    ----------
    sample : Sample
        Observations.
    model : FittedNormal
        Theoretical distribution.
    rule : Union[BinningRule, str], optional
        Frequency class rule for the chi-squared test, by default Hartley
        equal width.
    alpha : float, optional
        Significance level in (0, 0.5], by default 0.05.
    extended : bool, optional
        Also run D-, D+, Kuiper, Cramer-von Mises and the mean, variance and
        standard deviation z statistics, by default False.
    tests : Optional[Iterable[Union[TestName, str]]], optional
        Explicit subset of tests to run.

    Returns
    -------
    List[TestResult]
        One result per selected test.
    """
    if not 0 < alpha <= 0.5:
        raise ValueError(f"alpha must be in (0, 0.5], got {alpha}.")

    rule = BinningRule(rule)
    results = []

    for test in select_tests(extended, tests):
        try:
            result = _SLOTS[test](sample, model, rule, alpha)
        except NormScreenError as error:
            logger.warning(
                "%s failed on '%s': %s", test.label, sample.label, error
            )
            result = TestResult.failed(test, alpha, error)
        else:
            logger.debug(
                "%s on '%s': statistic=%.6g p=%.6g",
                test.label,
                sample.label,
                result.statistic,
                result.p,
            )
        results.append(result)

    return results
