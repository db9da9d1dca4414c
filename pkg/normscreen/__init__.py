"""NormScreen.

Goodness-of-fit and normality screening with Grubbs outlier removal.
"""
__version__ = "0.0.1b1"

from . import binning, normality, outliers, report, sample, special
from .binning import BinningRule, build_classes
from .fixtures import load_fixture
from .normality import TestName, TestResult, run_battery
from .outliers import grubbs, screen
from .sample import FittedNormal, Sample, fit_normal, make_sample

__all__ = [
    "__version__",
    "binning",
    "normality",
    "outliers",
    "report",
    "sample",
    "special",
    "BinningRule",
    "FittedNormal",
    "Sample",
    "TestName",
    "TestResult",
    "build_classes",
    "fit_normal",
    "grubbs",
    "load_fixture",
    "make_sample",
    "run_battery",
    "screen",
]
