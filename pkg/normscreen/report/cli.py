"""Command line interface.

Exit codes: 0 when no selected test rejects normality on the final sample,
1 when some test rejects it, 2 on usage, data or I/O errors.
"""
import argparse
import logging
import sys
from typing import List, Optional

from normscreen import __version__
from normscreen.binning import BinningRule
from normscreen.errors import NormScreenError
from normscreen.outliers.screening import DEFAULT_MAX_ITER

from .config import OutputFormat, RunConfig
from .report import render, run

logger = logging.getLogger(__name__)

EXIT_USAGE = 2

_LOG_LEVELS = [logging.WARNING, logging.INFO, logging.DEBUG]


def build_parser() -> argparse.ArgumentParser:
    """Argument parser of the ``normscreen`` command."""
    parser = argparse.ArgumentParser(
        prog="normscreen",
        description=(
            "Goodness-of-fit and normality screening of a univariate "
            "sample, with Grubbs outlier removal."
        ),
    )
    parser.add_argument(
        "--input",
        required=True,
        help="data file, or a bundled dataset: set1, set2",
    )
    parser.add_argument(
        "--csv-column",
        default=None,
        help="read the input as CSV and use this column (name or index)",
    )
    parser.add_argument(
        "--alpha", type=float, default=0.05, help="significance level"
    )
    parser.add_argument(
        "--binning",
        choices=[rule.value for rule in BinningRule],
        default=BinningRule.HARTLEY_EQUAL_WIDTH.value,
        help="frequency class rule of the chi-squared test",
    )
    parser.add_argument(
        "--screen",
        action="store_true",
        help="remove Grubbs outliers one at a time and retest",
    )
    parser.add_argument(
        "--max-iter",
        type=int,
        default=DEFAULT_MAX_ITER,
        help="maximum number of screening removals",
    )
    parser.add_argument(
        "--extended",
        action="store_true",
        help="also run D-, D+, Kuiper, Cramer-von Mises and z moment tests",
    )
    parser.add_argument(
        "--tests",
        default=None,
        help="comma separated subset of tests, e.g. KS_D,JarqueBera",
    )
    parser.add_argument("--mu", type=float, default=None, help="model mean")
    parser.add_argument(
        "--sigma", type=float, default=None, help="model standard deviation"
    )
    parser.add_argument(
        "--output",
        choices=[output.value for output in OutputFormat],
        default=OutputFormat.TEXT.value,
        help="report format",
    )
    parser.add_argument(
        "--histogram",
        default=None,
        metavar="PATH",
        help="write the histogram classes as CSV",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log progress to stderr (-vv for debug)",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    return parser


def configure_logging(verbosity: int) -> None:
    """Send package logs to stderr at a level set by ``-v`` flags."""
    level = _LOG_LEVELS[min(verbosity, len(_LOG_LEVELS) - 1)]
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(
        logging.Formatter("%(levelname)s %(name)s: %(message)s")
    )

    package_logger = logging.getLogger("normscreen")
    package_logger.handlers = [handler]
    package_logger.setLevel(level)
    package_logger.propagate = False


def main(argv: Optional[List[str]] = None) -> int:
    """Run the ``normscreen`` command.

    Parameters
    ----------
    argv : Optional[List[str]], optional
        Arguments, by default ``sys.argv[1:]``.

    Returns
    -------
    int
        Exit code.
    """
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)

    try:
        config = RunConfig.from_namespace(args)
        report, code = run(config)
    except (NormScreenError, OSError) as error:
        print(f"normscreen: error: {error}", file=sys.stderr)
        return EXIT_USAGE

    sys.stdout.write(render(report, config.output))
    logger.debug("exit code %d", code)

    return code
