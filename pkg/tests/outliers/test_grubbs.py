import logging

import normscreen as ns
from normscreen.outliers import GrubbsVariant, grubbs

import numpy as np

import pytest


def test_set2_flags_largest_value(set2):
    result = grubbs(set2)

    assert result.variant is GrubbsVariant.TWO_SIDED
    assert result.suspect_value == 9.603
    assert result.suspect_index == set2.n - 1
    assert result.g == pytest.approx(3.75852, abs=1e-4)
    assert result.t == pytest.approx(3.75847, abs=1e-4)
    assert result.p == pytest.approx(0.04597, abs=5e-4)
    assert result.t_exact == pytest.approx(3.89578, abs=1e-4)
    assert result.p_exact == pytest.approx(0.02733, abs=5e-4)
    assert result.flags(0.05)
    assert not result.flags(0.01)


@pytest.mark.parametrize(
    "fixture, g, p, p_exact",
    [
        ("set1", 3.128, 0.3459, 0.2519),
        ("set2_trimmed", 3.33277, 0.2095, 0.1510),
    ],
)
def test_nothing_flagged(request, fixture, g, p, p_exact):
    sample = request.getfixturevalue(fixture)
    result = grubbs(sample)

    assert result.g == pytest.approx(g, abs=1e-3)
    assert result.p == pytest.approx(p, abs=1e-3)
    assert result.p_exact == pytest.approx(p_exact, abs=1e-3)
    assert not result.flags(0.05)


def test_set1_suspect_is_minimum(set1):
    result = grubbs(set1)

    assert result.suspect_index == 0
    assert result.suspect_value == -6.0


def test_tie_goes_to_maximum():
    result = grubbs(ns.make_sample([-1.0, 0.0, 0.0, 1.0]))

    assert result.suspect_value == 1.0
    assert result.suspect_index == 3


def test_variants(set2):
    low = grubbs(set2, GrubbsVariant.MIN)
    high = grubbs(set2, "max")
    both = grubbs(set2, "two-sided")

    assert low.suspect_value == set2.min_value
    assert high.suspect_value == set2.max_value
    assert both.g == max(low.g, high.g)

    # linear transform: 2 N one-sided tail equals N two-sided tail
    assert high.p == pytest.approx(both.p, rel=1e-12)
    # exact inversion: the two-sided p doubles the one-sided one
    assert both.p_exact == pytest.approx(2 * high.p_exact, rel=1e-12)

    with pytest.raises(ValueError):
        grubbs(set2, "middle")


def test_p_value_decreases_with_g(rng):
    base = list(np.clip(rng.normal(size=30), -1.5, 1.5))
    results = [
        grubbs(ns.make_sample(base + [outlier]))
        for outlier in np.linspace(2.5, 6.0, 15)
    ]

    g = np.array([r.g for r in results])
    p = np.array([r.p for r in results])
    p_exact = np.array([r.p_exact for r in results])

    assert np.all(np.diff(g) > 0)
    assert np.all(np.diff(p) <= 0)
    assert np.all(np.diff(p_exact) <= 0)
    assert np.all((0 <= p) & (p <= 1))


@pytest.mark.parametrize("fixture", ["set1", "set2", "set2_trimmed"])
def test_transforms_agree_for_moderate_g(request, fixture):
    sample = request.getfixturevalue(fixture)
    result = grubbs(sample)
    n = sample.n

    assert n * result.g**2 <= 0.5 * (n - 1) ** 2
    assert result.t_exact >= result.t
    assert result.t_exact == pytest.approx(result.t, rel=0.1)


def test_exact_inversion_out_of_domain(caplog):
    # the spike reaches the largest G possible for its size
    sample = ns.make_sample([0.0] * 20 + [10.0])

    with caplog.at_level(logging.WARNING, logger="normscreen"):
        result = grubbs(sample)

    assert result.g == pytest.approx(20 / np.sqrt(21))
    assert result.flags(0.05)
    assert result.p_exact <= result.p
    if result.t_exact == np.inf:
        assert result.p_exact == 0.0
        assert "exact inversion" in caplog.text


def test_too_few():
    with pytest.raises(ns.errors.TooFewObservationsError):
        grubbs(ns.make_sample([1.0, 2.0, 3.0]))

    with pytest.raises(ns.errors.DegenerateSampleError):
        grubbs(ns.make_sample([1.0, 1.0, 1.0, 1.0]))
