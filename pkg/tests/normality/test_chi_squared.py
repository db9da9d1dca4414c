import normscreen as ns
from normscreen.binning import BinningRule, FrequencyClasses
from normscreen.normality import TestName, chi_squared_test

import numpy as np

import pytest


def _classes(observed, expected):
    k = len(observed)
    edges = np.concatenate(([-np.inf], np.arange(k - 1.0), [np.inf]))
    return FrequencyClasses(
        edges=edges,
        observed=np.array(observed),
        expected=np.array(expected, dtype=float),
        rule=BinningRule.HARTLEY_EQUAL_WIDTH,
    )


def test_perfect_fit():
    classes = _classes([10, 20, 20, 10], [10, 20, 20, 10])
    result = chi_squared_test(classes)

    assert result.test is TestName.CHI_SQUARED
    assert result.statistic == 0.0
    assert result.df == 1
    assert result.p == 1.0
    assert result.metadata == {"classes": 4}


def test_statistic_and_df():
    classes = _classes([12, 8, 15, 5, 10], [10, 10, 10, 10, 10])
    result = chi_squared_test(classes, t_params=0)

    # (4 + 4 + 25 + 25 + 0) / 10
    assert result.statistic == pytest.approx(5.8)
    assert result.df == 4
    assert result.p == pytest.approx(ns.special.chi2_sf(5.8, 4))


def test_insufficient_df():
    with pytest.raises(ns.errors.InsufficientDFError):
        chi_squared_test(_classes([10, 10, 10], [10, 10, 10]))


def test_expected_must_be_positive():
    with pytest.raises(ns.errors.DomainError):
        chi_squared_test(_classes([10, 10, 10, 10], [10, 0, 15, 15]))


@pytest.mark.parametrize(
    "fixture, rule, x2, df",
    [
        ("set1", BinningRule.HARTLEY_EQUAL_WIDTH, 2.3306, 4),
        ("set2", BinningRule.HARTLEY_EQUAL_WIDTH, 5.3307, 3),
        ("set2_trimmed", BinningRule.HARTLEY_EQUAL_WIDTH, 7.1241, 3),
        ("set1", BinningRule.HARTLEY_EQUAL_PROBABILITY, 2.6747, 5),
        ("set2", BinningRule.HARTLEY_EQUAL_PROBABILITY, 11.1359, 6),
        ("set2_trimmed", BinningRule.HARTLEY_EQUAL_PROBABILITY, 13.9415, 6),
    ],
)
def test_fixture_statistics(request, fixture, rule, x2, df):
    sample = request.getfixturevalue(fixture)
    classes = ns.build_classes(sample, ns.fit_normal(sample), rule)

    result = chi_squared_test(classes)

    assert result.statistic == pytest.approx(x2, abs=1e-3)
    assert result.df == df


def test_trimmed_set_not_rejected(set2_trimmed):
    classes = ns.build_classes(set2_trimmed, ns.fit_normal(set2_trimmed))
    result = chi_squared_test(classes)

    assert result.p == pytest.approx(0.068, abs=2e-3)
    assert not result.reject
