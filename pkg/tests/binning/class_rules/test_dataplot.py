import normscreen as ns
from normscreen.binning import class_rules

import numpy as np

import pytest


def test_dataplot_edges(set2):
    model = ns.fit_normal(set2)
    edges = class_rules.dataplot_width(set2, model)

    s = set2.moments.s
    mean = set2.moments.mean

    assert len(edges) == 40
    assert np.allclose(np.diff(edges), 0.3 * s)
    # class centers at mean + j * width, the central class holds the mean
    assert edges[19] == pytest.approx(mean - 0.15 * s)
    assert edges[20] == pytest.approx(mean + 0.15 * s)
    assert edges[0] == pytest.approx(mean - 5.85 * s)
