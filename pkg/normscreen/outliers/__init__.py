"""Grubbs outlier detection and iterative screening."""
from .grubbs import GrubbsResult, GrubbsVariant, grubbs
from .screening import (
    ScreeningHistory,
    ScreeningIteration,
    StopReason,
    screen,
)


__all__ = [
    "GrubbsResult",
    "GrubbsVariant",
    "ScreeningHistory",
    "ScreeningIteration",
    "StopReason",
    "grubbs",
    "screen",
]
