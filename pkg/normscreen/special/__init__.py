"""Special functions module."""
from .functions import (
    TailKind,
    chi2_sf,
    ln_gamma,
    normal_cdf,
    normal_tail,
    student_t_tail,
)

__all__ = [
    "TailKind",
    "chi2_sf",
    "ln_gamma",
    "normal_cdf",
    "normal_tail",
    "student_t_tail",
]
