"""Sample module."""
from .fitted_normal import FittedNormal, fit_normal
from .moments import Moments, moments
from .sample import Sample, ecdf, make_sample

__all__ = [
    "FittedNormal",
    "Moments",
    "Sample",
    "ecdf",
    "fit_normal",
    "make_sample",
    "moments",
]
