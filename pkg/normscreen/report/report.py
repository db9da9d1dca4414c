"""Screening report module.

Orchestrates a run (ingest, battery, screening, histogram) and renders the
outcome as a text table, JSON document or CSV table.
"""
import json
import logging
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from normscreen import __version__
from normscreen.binning import FrequencyClasses, build_classes
from normscreen.errors import NormScreenError
from normscreen.normality import TestResult, rejections, run_battery
from normscreen.outliers import GrubbsResult, ScreeningHistory, screen
from normscreen.sample import FittedNormal, Sample, fit_normal

import numpy as np

import pandas as pd

from .config import OutputFormat, RunConfig
from .histogram import emit_histogram
from .ingest import ingest

logger = logging.getLogger(__name__)

SCHEMA_ID = "normscreen/report-v1"
SCHEMA_PATH = Path(__file__).resolve().parent / "schema" / "report-v1.json"

CSV_COLUMNS = [
    "stage",
    "test",
    "statistic",
    "df",
    "p",
    "p_method",
    "reject",
    "self_referential",
    "error",
]


@dataclass(frozen=True)
class ScreeningReport:
    """Everything a run produced.

    Parameters
    ----------
    label : str
        Dataset name.
    n : int
        Number of observations.
    model : FittedNormal
        Model the battery was run against.
    battery : Tuple[TestResult, ...]
        Battery on the full sample.
    screening : Optional[ScreeningHistory]
        Grubbs screening, None when not requested.
    histogram : Optional[FrequencyClasses]
        Frequency classes of the full sample, None when binning failed.
    provenance : Mapping[str, Any]
        Package version, configuration echo and timestamp.
    """

    label: str
    n: int
    model: FittedNormal
    battery: Tuple[TestResult, ...]
    screening: Optional[ScreeningHistory] = None
    histogram: Optional[FrequencyClasses] = None
    provenance: Mapping[str, Any] = field(default_factory=dict)

    @property
    def final_battery(self) -> Tuple[TestResult, ...]:
        """Battery on the sample left after screening."""
        if self.screening is not None and self.screening.final_battery:
            return self.screening.final_battery
        return self.battery

    @property
    def rejected(self) -> List[TestResult]:
        """Final battery results that reject normality."""
        return rejections(self.final_battery)

    @property
    def exit_code(self) -> int:
        """0 when no selected test rejects normality, 1 otherwise."""
        return 1 if self.rejected else 0


def build_report(sample: Sample, config: RunConfig) -> ScreeningReport:
    """Run the battery, and the screening when requested, on a sample.

    Parameters
    ----------
    sample : Sample
        Observations.
    config : RunConfig
        Run configuration.

    Returns
    -------
    ScreeningReport
        Complete report.
    """
    model = config.external_model or fit_normal(sample)
    logger.info(
        "'%s': normal model mu = %.6g, sigma = %.6g%s",
        sample.label,
        model.mu,
        model.sigma,
        "" if config.external_model else " (plug-in)",
    )

    battery = run_battery(
        sample,
        model,
        config.rule,
        config.alpha,
        config.extended,
        config.tests,
    )

    history = None
    if config.screen:
        history = screen(
            sample,
            alpha=config.alpha,
            max_iter=config.max_iter,
            rule=config.rule,
            model=config.external_model,
            extended=config.extended,
            tests=config.tests,
        )

    try:
        classes = build_classes(sample, model, config.rule)
    except NormScreenError as error:
        logger.warning("no histogram for '%s': %s", sample.label, error)
        classes = None

    return ScreeningReport(
        label=sample.label,
        n=sample.n,
        model=model,
        battery=tuple(battery),
        screening=history,
        histogram=classes,
        provenance={
            "version": __version__,
            "config": config.as_dict(),
            "timestamp": datetime.now(timezone.utc).isoformat(
                timespec="seconds"
            ),
        },
    )


def run(config: RunConfig) -> Tuple[ScreeningReport, int]:
    """Execute a configured run.

    Parameters
    ----------
    config : RunConfig
        Run configuration.

    Returns
    -------
    Tuple[ScreeningReport, int]
        Report and exit code (0 normality not rejected, 1 rejected).

    Raises
    ------
    NormScreenError
        Invalid data.
    OSError
        Unreadable input or unwritable histogram file.
    """
    sample = ingest(config.input, config.input_format, config.csv_column)
    report = build_report(sample, config)

    if config.histogram_out is not None:
        if report.histogram is None:
            raise NormScreenError(
                f"No frequency classes could be built for '{report.label}'."
            )
        emit_histogram(report.histogram, config.histogram_out)

    return report, report.exit_code


# =============================================================================
# Serialization
# =============================================================================
def _number(value: Optional[float]) -> Optional[float]:
    """Finite floats as floats, anything else as None (JSON null)."""
    if value is None or not np.isfinite(value):
        return None
    return float(value)


def _test_to_dict(result: TestResult) -> Dict[str, Any]:
    entry: Dict[str, Any] = {
        "name": result.test.value,
        "statistic": _number(result.statistic),
    }
    if result.df is not None:
        entry["df"] = int(result.df)
    entry["p"] = [
        {"method": method, "p": float(p)} for method, p in result.p_values
    ]
    entry["reject"] = bool(result.reject)
    entry["self_referential"] = result.self_referential
    if result.metadata:
        entry["metadata"] = {
            key: _number(value) for key, value in result.metadata.items()
        }
    if result.error is not None:
        entry["error"] = result.error
    return entry


def _grubbs_to_dict(result: Optional[GrubbsResult]) -> Optional[Dict]:
    if result is None:
        return None
    return {
        "variant": result.variant.value,
        "g": result.g,
        "p": result.p,
        "p_exact": result.p_exact,
        "t": result.t,
        "t_exact": _number(result.t_exact),
        "suspect_value": result.suspect_value,
        "suspect_index": result.suspect_index,
        "n": result.n,
    }


def _model_to_dict(model: Optional[FittedNormal]) -> Optional[Dict]:
    if model is None:
        return None
    return {"mu": model.mu, "sigma": model.sigma}


def report_to_dict(report: ScreeningReport) -> Dict[str, Any]:
    """Convert a report to plain JSON types.

    Infinite histogram edges and NaN statistics become None.

    Parameters
    ----------
    report : ScreeningReport
        Report to convert.

    Returns
    -------
    Dict[str, Any]
        Document following the ``report-v1`` schema.
    """
    document: Dict[str, Any] = {
        "schema": SCHEMA_ID,
        "dataset": {
            "label": report.label,
            "n": report.n,
            "mu": report.model.mu,
            "sigma": report.model.sigma,
        },
        "tests": [_test_to_dict(r) for r in report.battery],
    }

    if report.screening is not None:
        history = report.screening
        document["screening"] = {
            "iterations": [
                {
                    "removed_value": it.removed_value,
                    "n": it.n,
                    "grubbs": _grubbs_to_dict(it.grubbs),
                    "model": _model_to_dict(it.model),
                    "tests": [_test_to_dict(r) for r in it.battery],
                }
                for it in history.iterations
            ],
            "stop_reason": history.stop_reason.value,
            "final_n": history.final_sample.n,
            "final_grubbs": _grubbs_to_dict(history.final_grubbs),
        }

    if report.histogram is None:
        document["histogram"] = None
    else:
        document["histogram"] = {
            "rule": report.histogram.rule.value,
            "edges": [_number(e) for e in report.histogram.edges],
            "observed": [int(o) for o in report.histogram.observed],
            "expected": [float(e) for e in report.histogram.expected],
        }

    document["decision"] = {
        "rejected": [r.test.value for r in report.rejected],
        "exit_code": report.exit_code,
    }
    document["provenance"] = dict(report.provenance)

    return document


def _percent(p: float) -> str:
    return f"{100 * p:.1f}%"


def _value_cell(result: TestResult) -> str:
    if result.error is not None:
        return "error"
    if result.df is not None:
        return f"{result.statistic:.5g}(df={result.df})"
    return f"{result.statistic:.5g}"


def _reject_cell(result: TestResult) -> str:
    if result.error is not None:
        return "-"
    if result.self_referential:
        return "n/a"
    return "Yes" if result.reject else "No"


def _table(results: Sequence[TestResult]) -> List[str]:
    rows = [
        f"{'Statistic':<24}{'Value':<18}"
        f"{'Probability of observation':<30}Reject"
    ]
    for result in results:
        probability = "; ".join(_percent(p) for _, p in result.p_values)
        rows.append(
            f"{result.test.label:<24}{_value_cell(result):<18}"
            f"{probability or '-':<30}{_reject_cell(result)}"
        )
    return rows


def _render_text(report: ScreeningReport) -> str:
    alpha = report.provenance.get("config", {}).get("alpha")
    lines = [
        f"Dataset: {report.label} (n = {report.n})",
        f"Normal model: mu = {report.model.mu:.5g}, "
        f"sigma = {report.model.sigma:.5g}",
    ]
    if alpha is not None:
        lines.append(f"Significance level: {_percent(alpha)}")
    lines.append("")
    lines.extend(_table(report.battery))

    history = report.screening
    if history is not None:
        lines.extend(["", "Grubbs screening (two-sided)"])
        for number, it in enumerate(history.iterations, start=1):
            lines.append(
                f"  iteration {number}: removed {it.removed_value:g} "
                f"(G = {it.grubbs.g:.5g}, p = {_percent(it.grubbs.p)}; "
                f"exact p = {_percent(it.grubbs.p_exact)}), n = {it.n}"
            )
        stop = f"  stop: {history.stop_reason.value}"
        if history.final_grubbs is not None:
            stop += (
                f" (G = {history.final_grubbs.g:.5g}, "
                f"p = {_percent(history.final_grubbs.p)})"
            )
        lines.append(stop)

        if history.iterations and history.iterations[-1].model is not None:
            last = history.iterations[-1]
            lines.extend(
                [
                    "",
                    f"After screening (n = {last.n}): "
                    f"mu = {last.model.mu:.5g}, "
                    f"sigma = {last.model.sigma:.5g}",
                    "",
                ]
            )
            lines.extend(_table(last.battery))

    rejected = report.rejected
    lines.append("")
    if rejected:
        names = ", ".join(r.test.label for r in rejected)
        lines.append(f"Normality rejected by: {names}")
    else:
        lines.append("Normality not rejected.")

    return "\n".join(lines) + "\n"


def _render_csv(report: ScreeningReport) -> str:
    stages = [("initial", report.battery)]
    if report.screening is not None and report.screening.final_battery:
        stages.append(("final", report.screening.final_battery))

    rows = [
        {
            "stage": stage,
            "test": r.test.value,
            "statistic": r.statistic,
            "df": r.df,
            "p": r.p,
            "p_method": r.p_values[0][0] if r.p_values else None,
            "reject": r.reject,
            "self_referential": r.self_referential,
            "error": r.error,
        }
        for stage, results in stages
        for r in results
    ]
    frame = pd.DataFrame(rows, columns=CSV_COLUMNS)
    frame["df"] = frame["df"].astype("Int64")

    return frame.to_csv(index=False, float_format="%.10g")


def render(
    report: ScreeningReport,
    output: Union[OutputFormat, str] = OutputFormat.TEXT,
) -> str:
    """Render a report.

    Parameters
    ----------
    report : ScreeningReport
        Report to render.
    output : Union[OutputFormat, str], optional
        "text" for a fixed width table (percentages with one decimal),
        "json" for the full precision document, "csv" for one row per test.
        By default text.

    Returns
    -------
    str
        Rendered report.
    """
    output = OutputFormat(output)

    if output is OutputFormat.JSON:
        return json.dumps(report_to_dict(report), indent=2) + "\n"
    if output is OutputFormat.CSV:
        return _render_csv(report)
    return _render_text(report)


def load_schema() -> Dict[str, Any]:
    """JSON schema of the report document."""
    return json.loads(SCHEMA_PATH.read_text(encoding="utf-8"))
