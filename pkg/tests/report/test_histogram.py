import normscreen as ns
from normscreen.binning import BinningRule, FrequencyClasses
from normscreen.report import emit_histogram, histogram_frame, write_atomic

import numpy as np

import pandas as pd

import pytest


def _two_classes():
    return FrequencyClasses(
        edges=np.array([-np.inf, 0.0, np.inf]),
        observed=np.array([6, 9]),
        expected=np.array([7.5, 7.5]),
        rule=BinningRule.HARTLEY_EQUAL_WIDTH,
    )


def test_histogram_frame():
    frame = histogram_frame(_two_classes())

    assert list(frame.columns) == ["lo", "hi", "observed", "expected"]
    assert frame["lo"].tolist() == [-np.inf, 0.0]
    assert frame["hi"].tolist() == [0.0, np.inf]
    assert frame["observed"].sum() == 15


def test_emit_histogram(tmp_path):
    path = tmp_path / "histogram.csv"
    emit_histogram(_two_classes(), path)

    text = path.read_text()
    assert text.splitlines()[0] == "lo,hi,observed,expected"
    assert text.splitlines()[1] == "-inf,0,6,7.5"

    written = pd.read_csv(path)
    assert written["hi"].iloc[-1] == np.inf
    assert written["observed"].tolist() == [6, 9]


def test_dataplot_histogram_of_set2(set2, tmp_path):
    classes = ns.build_classes(
        set2, ns.fit_normal(set2), BinningRule.DATAPLOT_WIDTH
    )
    frame = emit_histogram(classes, tmp_path / "set2.csv")

    assert frame["observed"].sum() == 206
    assert frame["expected"].sum() == pytest.approx(206)
    assert (frame["observed"] >= 5).all()
    assert not list(tmp_path.glob("*.tmp"))


def test_unwritable_destination(tmp_path):
    with pytest.raises(OSError):
        emit_histogram(_two_classes(), tmp_path / "missing" / "h.csv")


def test_write_atomic_replaces(tmp_path):
    path = tmp_path / "out.txt"
    path.write_text("old")

    write_atomic(path, "new\n")

    assert path.read_text() == "new\n"
    assert [p.name for p in tmp_path.iterdir()] == ["out.txt"]
