"""Run configuration module."""
import argparse
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional, Tuple, Union

from normscreen.binning import BinningRule
from normscreen.errors import ConfigError
from normscreen.normality import TestName
from normscreen.outliers.screening import DEFAULT_MAX_ITER
from normscreen.sample import FittedNormal

import numpy as np


class InputFormat(Enum):
    """Input file formats."""

    LINES = "lines"
    CSV = "csv"


class OutputFormat(Enum):
    """Report renderings."""

    TEXT = "text"
    JSON = "json"
    CSV = "csv"


@dataclass(frozen=True)
class RunConfig:
    """Configuration of a command line run.

    Parameters
    ----------
    input : str
        Data file path or bundled dataset alias ("set1", "set2").
    input_format : InputFormat
        Lines of numbers or a CSV column, by default lines.
    csv_column : Optional[Union[str, int]]
        Column name or 0-based index of the CSV format.
    alpha : float
        Significance level in (0, 0.5], by default 0.05.
    rule : BinningRule
        Frequency class rule of the chi-squared test.
    tests : Optional[Tuple[TestName, ...]]
        Explicit subset of tests, None runs the battery selection.
    extended : bool
        Run the extended battery.
    screen : bool
        Run the Grubbs screening loop.
    max_iter : int
        Maximum number of screening removals.
    output : OutputFormat
        Report rendering.
    histogram_out : Optional[str]
        Path of the histogram CSV, None to skip it.
    mu : Optional[float]
        External model mean.
    sigma : Optional[float]
        External model standard deviation.
    """

    input: str
    input_format: InputFormat = InputFormat.LINES
    csv_column: Optional[Union[str, int]] = None
    alpha: float = 0.05
    rule: BinningRule = BinningRule.HARTLEY_EQUAL_WIDTH
    tests: Optional[Tuple[TestName, ...]] = None
    extended: bool = False
    screen: bool = False
    max_iter: int = DEFAULT_MAX_ITER
    output: OutputFormat = OutputFormat.TEXT
    histogram_out: Optional[str] = None
    mu: Optional[float] = None
    sigma: Optional[float] = None

    def __post_init__(self) -> None:
        # Enum fields also accept their string values.
        for name, enum in (
            ("input_format", InputFormat),
            ("rule", BinningRule),
            ("output", OutputFormat),
        ):
            object.__setattr__(self, name, enum(getattr(self, name)))
        if self.tests is not None:
            object.__setattr__(
                self, "tests", tuple(TestName(t) for t in self.tests)
            )

        if not 0 < self.alpha <= 0.5:
            raise ConfigError(f"alpha must be in (0, 0.5], got {self.alpha}.")
        if self.max_iter < 1:
            raise ConfigError(
                f"max_iter must be at least 1, got {self.max_iter}."
            )
        if (self.mu is None) != (self.sigma is None):
            raise ConfigError("mu and sigma must be given together.")
        if self.sigma is not None and not (
            np.isfinite(self.sigma) and self.sigma > 0
        ):
            raise ConfigError(f"sigma must be positive, got {self.sigma}.")
        if self.input_format is InputFormat.CSV and self.csv_column is None:
            raise ConfigError("The CSV format needs a column.")

    @property
    def external_model(self) -> Optional[FittedNormal]:
        """Model given by mu and sigma, None when they were not set."""
        if self.mu is None:
            return None
        return FittedNormal(mu=self.mu, sigma=self.sigma)

    def as_dict(self) -> Dict[str, Any]:
        """JSON friendly echo of the configuration."""
        return {
            "input": self.input,
            "input_format": self.input_format.value,
            "csv_column": self.csv_column,
            "alpha": self.alpha,
            "rule": self.rule.value,
            "tests": (
                None if self.tests is None else [t.value for t in self.tests]
            ),
            "extended": self.extended,
            "screen": self.screen,
            "max_iter": self.max_iter,
            "output": self.output.value,
            "histogram_out": self.histogram_out,
            "mu": self.mu,
            "sigma": self.sigma,
        }

    @classmethod
    def from_namespace(cls, args: argparse.Namespace) -> "RunConfig":
        """Build the configuration from parsed command line arguments.

        Parameters
        ----------
        args : argparse.Namespace
            Namespace produced by the normscreen argument parser.

        Returns
        -------
        RunConfig
            Validated configuration.

        Raises
        ------
        ConfigError
            Inconsistent arguments.
        """
        column = args.csv_column
        if column is not None and column.isdigit():
            column = int(column)

        tests = None
        if args.tests:
            try:
                tests = tuple(
                    TestName(name.strip())
                    for name in args.tests.split(",")
                    if name.strip()
                )
            except ValueError as error:
                raise ConfigError(str(error)) from None

        return cls(
            input=args.input,
            input_format=(
                InputFormat.LINES if column is None else InputFormat.CSV
            ),
            csv_column=column,
            alpha=args.alpha,
            rule=BinningRule(args.binning),
            tests=tests,
            extended=args.extended,
            screen=args.screen,
            max_iter=args.max_iter,
            output=OutputFormat(args.output),
            histogram_out=args.histogram,
            mu=args.mu,
            sigma=args.sigma,
        )
