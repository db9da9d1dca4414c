import normscreen as ns
from normscreen.normality import TestName, wilks_shapiro

import numpy as np

import pytest

from scipy import stats


@pytest.mark.parametrize(
    "fixture, w, p",
    [("set1", 0.98173, 0.028), ("set2", 0.98709, 0.058)],
)
def test_fixture_statistics(request, fixture, w, p):
    sample = request.getfixturevalue(fixture)
    result = wilks_shapiro(sample)

    assert result.test is TestName.WILKS_SHAPIRO
    assert result.statistic == pytest.approx(w, abs=1e-3)
    assert result.p == pytest.approx(p, abs=0.007)
    assert result.p_values[0][0] == "royston"


def test_normal_scores_fit_well():
    n = 5
    i = np.arange(1, n + 1)
    sample = ns.make_sample(stats.norm.ppf((i - 0.375) / (n + 0.25)))

    result = wilks_shapiro(sample)

    assert 0.95 < result.statistic <= 1.0
    assert not result.reject


def test_skewed_sample_rejected(rng):
    sample = ns.make_sample(rng.exponential(size=200))

    assert wilks_shapiro(sample).reject


def test_size_range(rng):
    with pytest.raises(ns.errors.SampleSizeOutOfRangeError):
        wilks_shapiro(ns.make_sample(rng.normal(size=5001)))

    with pytest.raises(ns.errors.DegenerateSampleError):
        wilks_shapiro(ns.make_sample([2.0, 2.0, 2.0, 2.0]))


def test_location_scale_invariance(rng):
    raw = rng.normal(size=80)
    result = wilks_shapiro(ns.make_sample(raw))
    moved = wilks_shapiro(ns.make_sample(2.0 * raw + 7.0))

    assert moved.statistic == pytest.approx(result.statistic, abs=1e-5)
    assert moved.p == pytest.approx(result.p, abs=1e-4)
