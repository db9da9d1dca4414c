import normscreen as ns
from normscreen.normality import (
    TestName,
    c4,
    z_kurtosis,
    z_mean,
    z_skewness,
    z_statistics,
    z_std_dev,
    z_variance,
)

import numpy as np

import pytest


@pytest.mark.parametrize(
    "fixture, z_skew, p_skew, z_kurt, p_kurt",
    [
        ("set1", -2.5836, 0.0098, 0.5314, 0.595),
        ("set2", 1.4769, 0.1397, 2.5106, 0.01205),
        ("set2_trimmed", 0.2643, 0.792, 0.8149, 0.415),
    ],
)
def test_fixture_statistics(request, fixture, z_skew, p_skew, z_kurt, p_kurt):
    sample = request.getfixturevalue(fixture)

    skew = z_skewness(sample)
    kurt = z_kurtosis(sample)

    assert skew.test is TestName.Z_SKEWNESS
    assert skew.statistic == pytest.approx(z_skew, abs=2e-3)
    assert skew.p == pytest.approx(p_skew, abs=3e-3)
    assert kurt.test is TestName.Z_KURTOSIS
    assert kurt.statistic == pytest.approx(z_kurt, abs=2e-3)
    assert kurt.p == pytest.approx(p_kurt, abs=3e-3)
    assert not skew.self_referential and not kurt.self_referential


def test_post_removal_probabilities(set2_trimmed):
    # reference 79.2% and 41.5%
    assert z_skewness(set2_trimmed).p == pytest.approx(0.792, abs=0.02)
    assert z_kurtosis(set2_trimmed).p == pytest.approx(0.415, abs=0.02)


def test_c4():
    assert c4(2) == pytest.approx(np.sqrt(2 / np.pi), rel=1e-12)
    assert c4(5) == pytest.approx(0.939986, abs=1e-6)
    assert c4(10) == pytest.approx(0.972659, abs=1e-6)
    assert c4(500) < 1.0


def test_plug_in_model_is_self_referential(set2):
    model = ns.fit_normal(set2)

    mean = z_mean(set2, model)
    std_dev = z_std_dev(set2, model)

    assert mean.statistic == pytest.approx(0.0, abs=1e-12)
    assert mean.self_referential
    assert not mean.counted
    assert z_variance(set2, model).self_referential

    c = c4(set2.n)
    assert std_dev.statistic == pytest.approx((c - 1) / np.sqrt(1 - c * c))
    assert std_dev.self_referential


def test_external_model(set2):
    model = ns.FittedNormal(mu=6.0, sigma=0.8)
    mean = z_mean(set2, model)
    mom = set2.moments

    assert not mean.self_referential
    assert mean.statistic == pytest.approx(
        (mom.mean - 6.0) * np.sqrt(set2.n) / mom.s
    )
    assert mean.reject
    assert mean.counted


def test_variance_statistic(set1):
    model = ns.FittedNormal(mu=0.0, sigma=2.0)
    n = set1.n
    mom = set1.moments

    expected = (
        n
        * ((n - 1) * mom.s**2 - 4.0 * n)
        / np.sqrt((n - 1) ** 3 * mom.m4 - (n - 3) * mom.m2**2)
    )

    assert z_variance(set1, model).statistic == pytest.approx(expected)


def test_all_statistics(set1):
    results = z_statistics(set1, ns.fit_normal(set1))

    assert [r.test for r in results] == [
        TestName.Z_MEAN,
        TestName.Z_VARIANCE,
        TestName.Z_STD_DEV,
        TestName.Z_SKEWNESS,
        TestName.Z_KURTOSIS,
    ]
    assert [r.self_referential for r in results] == [
        True,
        True,
        True,
        False,
        False,
    ]
    assert all(r.p_values[0][0] == "normal" for r in results)


def test_too_few():
    sample = ns.make_sample([1.0, 2.0, 4.0, 8.0])

    with pytest.raises(ns.errors.TooFewObservationsError):
        z_skewness(sample)

    with pytest.raises(ns.errors.TooFewObservationsError):
        z_mean(sample, ns.fit_normal(sample))


@pytest.mark.parametrize("statistic", [z_skewness, z_kurtosis])
def test_location_scale_invariance(rng, statistic):
    raw = rng.gamma(3.0, size=90)
    result = statistic(ns.make_sample(raw))
    moved = statistic(ns.make_sample(2.0 * raw + 7.0))

    assert moved.statistic == pytest.approx(result.statistic, rel=1e-10)
    assert moved.p == pytest.approx(result.p, rel=1e-9)
