"""Data ingestion module."""
import logging
import re
from pathlib import Path
from typing import List, Optional, Union

from normscreen.errors import EmptyInputError, ParseError
from normscreen.fixtures import FIXTURES
from normscreen.sample import Sample, make_sample

import pandas as pd

from .config import InputFormat

logger = logging.getLogger(__name__)

_SEPARATORS = re.compile(r"[\s,;]+")


def resolve_input(source: Union[str, Path]) -> Path:
    """Map a bundled dataset alias to its file, leave other paths as is.

    An existing file always wins over an alias of the same name.
    """
    path = Path(source)
    if not path.exists() and str(source).lower() in FIXTURES:
        return FIXTURES[str(source).lower()]
    return path


def _undecodable(path: Path, error: UnicodeDecodeError) -> ParseError:
    with open(path, "rb") as stream:
        for line_number, raw in enumerate(stream, start=1):
            try:
                raw.decode("utf-8")
            except UnicodeDecodeError:
                break
    return ParseError(line_number, f"not valid UTF-8 ({error.reason}).")


def _read_lines(path: Path) -> List[float]:
    try:
        with open(path, encoding="utf-8") as stream:
            lines = stream.readlines()
    except UnicodeDecodeError as error:
        raise _undecodable(path, error) from None

    values = []
    for line_number, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        for token in _SEPARATORS.split(line):
            if not token:
                continue
            try:
                values.append(float(token))
            except ValueError:
                raise ParseError(
                    line_number, f"'{token}' is not a number."
                ) from None
    return values


def _read_csv_column(path: Path, column: Union[str, int]) -> List[float]:
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False)
    except UnicodeDecodeError as error:
        raise _undecodable(path, error) from None
    except pd.errors.EmptyDataError:
        raise EmptyInputError(f"{path} has no data.") from None
    except pd.errors.ParserError as error:
        raise ParseError(1, f"malformed CSV: {error}") from None

    if isinstance(column, int):
        if not 0 <= column < frame.shape[1]:
            raise ParseError(
                1,
                f"column index {column} out of range, the file has "
                f"{frame.shape[1]} columns.",
            )
        cells = frame.iloc[:, column]
    elif column in frame.columns:
        cells = frame[column]
    else:
        raise ParseError(1, f"no column named '{column}'.")

    numbers = pd.to_numeric(cells.str.strip(), errors="coerce")
    bad = numbers.isna() & ~cells.str.strip().str.lower().isin(
        ["nan", "inf", "-inf", "+inf"]
    )

    if bad.any():
        row = int(bad.to_numpy().argmax())
        # header is line 1
        raise ParseError(row + 2, f"'{cells.iloc[row]}' is not a number.")

    return numbers.astype(float).tolist()


def ingest(
    source: Union[str, Path],
    input_format: Union[InputFormat, str] = InputFormat.LINES,
    column: Optional[Union[str, int]] = None,
    label: Optional[str] = None,
) -> Sample:
    """Read a sample from a file.

    The lines format holds one or more numbers per line separated by
    whitespace, commas or semicolons; blank lines and lines starting with
    ``#`` are skipped. The CSV format reads one column, selected by header
    name or 0-based index, from a file with a header row.

    Parameters
    ----------
    source : Union[str, Path]
        File path or bundled dataset alias.
    input_format : Union[InputFormat, str], optional
        File format, by default lines.
    column : Optional[Union[str, int]], optional
        CSV column.
    label : Optional[str], optional
        Sample label, by default the file stem or the alias.

    Returns
    -------
    Sample
        Sorted observations.

    Raises
    ------
    ParseError
        A value is not a number or a line is not valid UTF-8; carries the
        1-based line number.
    EmptyInputError
        The file holds no observations.
    OSError
        The file cannot be read.
    """
    input_format = InputFormat(input_format)
    path = resolve_input(source)

    if input_format is InputFormat.CSV:
        if column is None:
            raise ValueError("The CSV format needs a column.")
        values = _read_csv_column(path, column)
    else:
        values = _read_lines(path)

    if not values:
        raise EmptyInputError(f"{path} holds no observations.")

    if label is None:
        label = str(source) if str(source).lower() in FIXTURES else path.stem

    sample = make_sample(values, label=label)
    logger.info("loaded %d observations from %s", sample.n, path)

    return sample
