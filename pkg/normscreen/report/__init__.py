"""Ingestion, reporting and command line interface."""
from .config import InputFormat, OutputFormat, RunConfig
from .histogram import emit_histogram, histogram_frame, write_atomic
from .ingest import ingest, resolve_input
from .report import (
    ScreeningReport,
    build_report,
    load_schema,
    render,
    report_to_dict,
    run,
)

__all__ = [
    "InputFormat",
    "OutputFormat",
    "RunConfig",
    "ScreeningReport",
    "build_report",
    "emit_histogram",
    "histogram_frame",
    "ingest",
    "load_schema",
    "render",
    "report_to_dict",
    "resolve_input",
    "run",
    "write_atomic",
]
