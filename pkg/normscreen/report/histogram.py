"""Histogram emitter module."""
import logging
import os
import tempfile
from pathlib import Path
from typing import Union

from normscreen.binning import FrequencyClasses

import pandas as pd

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.6g"


def write_atomic(path: Union[str, Path], text: str) -> None:
    """Write a whole file at once through a temporary file and a rename.

    Parameters
    ----------
    path : Union[str, Path]
        Destination.
    text : str
        File contents.

    Raises
    ------
    OSError
        The destination directory is missing or not writable.
    """
    path = Path(path)
    descriptor, temporary = tempfile.mkstemp(
        dir=path.parent, prefix=f".{path.name}.", suffix=".tmp"
    )
    try:
        with os.fdopen(descriptor, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(temporary, path)
    except BaseException:
        Path(temporary).unlink(missing_ok=True)
        raise


def histogram_frame(classes: FrequencyClasses) -> pd.DataFrame:
    """Tabulate frequency classes with columns lo, hi, observed, expected."""
    return pd.DataFrame(
        {
            "lo": classes.edges[:-1],
            "hi": classes.edges[1:],
            "observed": classes.observed,
            "expected": classes.expected,
        }
    )


def emit_histogram(
    classes: FrequencyClasses, path: Union[str, Path]
) -> pd.DataFrame:
    """Write the plot data of a histogram as CSV.

    One row per class, floats with 6 significant digits. The outer edges
    are written as ``-inf`` and ``inf``.

    Parameters
    ----------
    classes : FrequencyClasses
        Classes to plot.
    path : Union[str, Path]
        Destination CSV file.

    Returns
    -------
    pd.DataFrame
        The written table.

    Raises
    ------
    OSError
        The file cannot be written.
    """
    frame = histogram_frame(classes)
    write_atomic(path, frame.to_csv(index=False, float_format=FLOAT_FORMAT))
    logger.info("histogram with %d classes written to %s", classes.k, path)

    return frame
