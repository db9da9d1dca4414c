import normscreen as ns

import numpy as np

import pytest


def test_make_sample_sorts():
    sample = ns.make_sample([3, 1, 2], label="toy")

    assert np.array_equal(sample.values, [1.0, 2.0, 3.0])
    assert sample.n == 3
    assert len(sample) == 3
    assert sample.label == "toy"
    assert repr(sample) == "Sample(label='toy', n=3, min=1, max=3)"


def test_make_sample_input_order_irrelevant(rng):
    raw = rng.normal(size=50)
    shuffled = rng.permutation(raw)

    a = ns.make_sample(raw)
    b = ns.make_sample(shuffled)

    assert np.array_equal(a.values, b.values)
    assert a.moments == b.moments


def test_make_sample_errors():
    with pytest.raises(ns.errors.EmptyInputError):
        ns.make_sample([])

    with pytest.raises(ns.errors.NonFiniteValueError) as info:
        ns.make_sample([1.0, np.nan])
    assert info.value.index == 1

    with pytest.raises(ns.errors.TooFewObservationsError):
        ns.make_sample([1.0, 2.0])


def test_sample_validation():
    with pytest.raises(ValueError):
        ns.Sample(np.array([3.0, 2.0, 1.0]), "unsorted")

    with pytest.raises(ValueError):
        ns.Sample(np.ones((2, 2)), "matrix")


def test_sample_is_immutable():
    sample = ns.make_sample([1.0, 2.0, 3.0])

    with pytest.raises(ValueError):
        sample.values = np.array([4.0, 5.0, 6.0])

    with pytest.raises(ValueError):
        sample.values[0] = 10.0


def test_without():
    sample = ns.make_sample([5.0, 1.0, 3.0, 4.0], label="x")
    smaller = sample.without(0)

    assert np.array_equal(smaller.values, [3.0, 4.0, 5.0])
    assert smaller.label == "x"
    assert sample.n == 4


def test_ties_fraction():
    sample = ns.make_sample([1.0, 1.0, 2.0, 2.0, 2.0, 3.0])

    assert sample.ties_fraction == pytest.approx(0.5)
    assert ns.make_sample([1.0, 2.0, 3.0]).ties_fraction == 0.0


def test_ecdf():
    sample = ns.make_sample([1.0, 2.0, 2.0, 4.0])

    assert ns.sample.ecdf(sample, 0.0) == 0.0
    assert ns.sample.ecdf(sample, 2.0) == 0.75
    assert ns.sample.ecdf(sample, 3.0) == 0.75
    assert ns.sample.ecdf(sample, 4.0) == 1.0
    assert np.array_equal(
        ns.sample.ecdf(sample, np.array([1.0, 1.5])), [0.25, 0.25]
    )


def test_fixtures(set1, set2):
    assert set1.n == 166
    assert set1.min_value == -6.0
    assert set1.max_value == 3.352

    assert set2.n == 206
    assert set2.min_value == 4.151
    assert set2.max_value == 9.603
