"""Class rules module."""

from .dataplot import dataplot_width
from .hartley import (
    class_count_hartley,
    hartley_equal_probability,
    hartley_equal_width,
)

__all__ = [
    "class_count_hartley",
    "dataplot_width",
    "hartley_equal_probability",
    "hartley_equal_width",
]
