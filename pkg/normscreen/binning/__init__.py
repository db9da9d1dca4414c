"""Frequency classes module."""
from . import class_rules
from .class_rules import class_count_hartley
from .frequency_classes import (
    BinningRule,
    FrequencyClasses,
    build_classes,
    merge_small_classes,
)

__all__ = [
    "BinningRule",
    "FrequencyClasses",
    "build_classes",
    "class_count_hartley",
    "class_rules",
    "merge_small_classes",
]
