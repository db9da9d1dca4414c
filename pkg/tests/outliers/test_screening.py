import logging

import normscreen as ns
from normscreen.normality import TestName, rejections
from normscreen.outliers import StopReason, screen

import numpy as np

import pytest


def test_set2_removes_one_outlier(set2, caplog):
    with caplog.at_level(logging.INFO, logger="normscreen"):
        history = screen(set2)

    assert history.removed_values == [9.603]
    assert history.stop_reason is StopReason.NO_OUTLIER
    assert history.final_sample.n == 205
    assert history.final_grubbs.p == pytest.approx(0.2095, abs=1e-3)
    assert "removed 9.603" in caplog.text

    iteration = history.iterations[0]
    assert iteration.n == 205
    assert iteration.grubbs.g == pytest.approx(3.75852, abs=1e-4)
    assert iteration.model.mu == pytest.approx(6.465337, abs=1e-5)
    assert iteration.model.sigma == pytest.approx(0.803444, abs=1e-5)
    assert len(iteration.battery) == 7
    assert rejections(history.final_battery) == []


def test_set1_has_no_outlier(set1):
    history = screen(set1)

    assert history.iterations == ()
    assert history.removed_values == []
    assert history.final_battery is None
    assert history.final_sample is set1
    assert history.stop_reason is StopReason.NO_OUTLIER
    assert history.final_grubbs.p == pytest.approx(0.3459, abs=1e-3)


def test_spike_leaves_degenerate_sample():
    sample = ns.make_sample([0.0] * 20 + [10.0], label="spike")
    history = screen(sample)

    assert history.removed_values == [10.0]
    assert history.stop_reason is StopReason.DEGENERATE_SAMPLE
    assert history.iterations[0].model is None
    assert history.iterations[0].battery == ()
    assert history.final_grubbs is None


def test_max_iterations(rng):
    values = np.concatenate((rng.normal(size=100), [40.0, 80.0, 160.0]))
    history = screen(ns.make_sample(values), max_iter=2)

    assert history.removed_values == [160.0, 80.0]
    assert history.stop_reason is StopReason.MAX_ITERATIONS
    assert history.final_sample.n == 101
    assert [it.n for it in history.iterations] == [102, 101]


def test_too_few_points():
    history = screen(ns.make_sample([1.0, 2.0, 9.0]))

    assert history.stop_reason is StopReason.TOO_FEW_POINTS
    assert history.iterations == ()


def test_external_model_is_kept(set2):
    model = ns.FittedNormal(mu=6.5, sigma=0.8)
    history = screen(set2, model=model, tests=[TestName.Z_MEAN])

    iteration = history.iterations[0]
    assert iteration.model is model
    assert [r.test for r in iteration.battery] == [TestName.Z_MEAN]
    assert not iteration.battery[0].self_referential


def test_arguments(set1):
    with pytest.raises(ValueError):
        screen(set1, alpha=0.0)

    with pytest.raises(ValueError):
        screen(set1, max_iter=0)
