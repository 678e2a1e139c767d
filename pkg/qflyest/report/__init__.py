from .expected import EXPECTED_CELLS, FIXTURE_T_POINTS, check_fixture, fixture_mismatches
from .render import (
    SCHEMA_VERSION,
    render_algorithm_report,
    render_comparison,
    render_mapping,
    render_pipeline_checks,
    render_results_table,
    render_series,
)
from .table import (
    ResultsTable,
    TableColumn,
    algorithm_reports,
    build_results_table,
    core_subroutine_stages,
    table_columns,
)

__all__ = [
    "EXPECTED_CELLS",
    "FIXTURE_T_POINTS",
    "SCHEMA_VERSION",
    "ResultsTable",
    "TableColumn",
    "algorithm_reports",
    "build_results_table",
    "check_fixture",
    "core_subroutine_stages",
    "fixture_mismatches",
    "render_algorithm_report",
    "render_comparison",
    "render_mapping",
    "render_pipeline_checks",
    "render_results_table",
    "render_series",
    "table_columns",
]
