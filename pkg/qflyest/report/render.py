import csv
import io
import json
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from ..datamodel import AlgorithmReport, ComparisonRow, OutputFormat, PipelineCheck, StageReport
from ..utils import format_rational
from .table import ResultsTable

SCHEMA_VERSION = 1


def format_cycles(value: Optional[int]) -> str:
    return "---" if value is None else f"{value:,}"


def markdown_table(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    lines = [
        "| " + " | ".join(headers) + " |",
        "|" + "|".join("---" for _ in headers) + "|",
    ]
    for row in rows:
        lines.append("| " + " | ".join(str(cell) for cell in row) + " |")
    return "\n".join(lines)


def csv_table(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(headers)
    for row in rows:
        writer.writerow(["" if cell is None else cell for cell in row])
    return buffer.getvalue().rstrip("\n")


def _json_default(value: Any) -> Any:
    if isinstance(value, Fraction):
        return format_rational(value)
    raise TypeError(f"{type(value).__name__} is not JSON serializable")


def to_json(payload: Dict[str, Any]) -> str:
    return json.dumps({"schema_version": SCHEMA_VERSION, **payload}, indent=2, default=_json_default)


def render_results_table(table: ResultsTable, fmt: OutputFormat) -> str:
    labels = [column.label for column in table.columns]
    if fmt == OutputFormat.JSON:
        return to_json(table.model_dump(mode="json"))

    if fmt == OutputFormat.CSV:
        rows = [
            [section.title, row.id, row.name, row.formula]
            + [None if row.cells.get(label) is None else row.cells[label].cycles for label in labels]
            for section in table.sections
            for row in section.rows
        ]
        return csv_table(["section", "id", "name", "formula", *labels], rows)

    blocks = []
    headers = ["Subroutine / Stage", "Formula (logical cycles)", *labels]
    for section in table.sections:
        rows = [
            [row.name, row.formula]
            + [format_cycles(None if row.cells.get(label) is None else row.cells[label].cycles) for label in labels]
            for row in section.rows
        ]
        blocks.append(f"### {section.title}\n\n{markdown_table(headers, rows)}")
    return "\n\n".join(blocks)


def render_algorithm_report(report: AlgorithmReport, fmt: OutputFormat) -> str:
    if fmt == OutputFormat.JSON:
        return to_json(
            {
                "algorithm": report.algorithm.value,
                "stages": [_stage_json(stage) for stage in report.stages],
                "total": _stage_json(report.total),
            }
        )

    labels = [f"t={format_rational(cell.t_bell)}" for cell in report.total.evaluated]
    stages = [*report.stages, report.total]
    if fmt == OutputFormat.CSV:
        rows = [[s.key, s.name, s.formula, *(cell.cycles for cell in s.evaluated)] for s in stages]
        return csv_table(["key", "name", "formula", *labels], rows)
    rows = [[s.name, s.formula, *(format_cycles(cell.cycles) for cell in s.evaluated)] for s in stages]
    return markdown_table(["Stage", "Formula (logical cycles)", *labels], rows)


def _stage_json(stage: StageReport) -> Dict[str, Any]:
    return {
        "key": stage.key,
        "name": stage.name,
        "formula": stage.formula,
        "cost": stage.cost.render(),
        "bell_slope": format_rational(stage.bell_slope),
        "evaluated": [
            {"t_bell": format_rational(c.t_bell), "exact": format_rational(c.exact), "cycles": c.cycles}
            for c in stage.evaluated
        ],
        "notes": stage.notes,
    }


def render_series(headers: Sequence[str], rows: Sequence[Sequence[Any]], fmt: OutputFormat, name: str) -> str:
    """Plain rows of numbers, e.g. a T_Bell sweep."""
    if fmt == OutputFormat.JSON:
        records = [dict(zip(headers, (_plain(v) for v in row))) for row in rows]
        return to_json({name: records})
    if fmt == OutputFormat.CSV:
        return csv_table(headers, [[_plain(v) for v in row] for row in rows])
    return markdown_table(headers, [[_display(v) for v in row] for row in rows])


def render_comparison(rows: Sequence[ComparisonRow], fmt: OutputFormat) -> str:
    if fmt == OutputFormat.JSON:
        return to_json({"comparison": [row.model_dump(mode="json") for row in rows]})
    headers = ["algorithm", "scenario", "t_bell", "qfly", "av", "av_scaled", "multiplier", "speedup", "scaled_speedup"]
    table_rows = [
        [
            row.algorithm.value,
            row.scenario,
            row.t_bell,
            row.qfly_cycles,
            row.av_cycles,
            row.av_scaled_cycles,
            row.multiplier,
            _ratio(row.speedup),
            _ratio(row.scaled_speedup),
        ]
        for row in rows
    ]
    return render_series(headers, table_rows, fmt, "comparison")


def render_pipeline_checks(checks: Sequence[PipelineCheck], fmt: OutputFormat) -> str:
    if fmt == OutputFormat.JSON:
        return to_json({"pipeline": [check.model_dump(mode="json") for check in checks]})
    headers = list(PipelineCheck.model_fields)
    return render_series(headers, [[getattr(check, h) for h in headers] for check in checks], fmt, "pipeline")


def render_mapping(data: Dict[str, Any], fmt: OutputFormat, name: str) -> str:
    """Key/value report such as topology metrics."""
    if fmt == OutputFormat.JSON:
        return to_json({name: data})
    rows: List[List[Any]] = [[key, _plain(value) if fmt == OutputFormat.CSV else _display(value)] for key, value in data.items()]
    if fmt == OutputFormat.CSV:
        return csv_table(["field", "value"], rows)
    return markdown_table(["Field", "Value"], rows)


def _ratio(value: Fraction) -> str:
    return f"{float(value):.2f}"


def _plain(value: Any) -> Any:
    if isinstance(value, Fraction):
        return format_rational(value)
    return value


def _display(value: Any) -> Any:
    if value is None:
        return "---"
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, int):
        return format_cycles(value)
    return _plain(value)
