from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from pydantic import BaseModel, ConfigDict

from ..algorithms import dqi_total, make_stage, qaoa_iteration
from ..baseline import AV_STAGE_KEYS, av_cycles, av_time_exact
from ..costalgebra import evaluate, round_cycles
from ..datamodel import Algorithm, AlgorithmReport, AVScenario, RunConfig, StageReport
from ..subroutines import dicke_unitary, gidney_adder, gridsynth_rotation, qcla_adder
from ..utils import Rational, format_rational

# omitted from the table layout: it is identically zero
HIDDEN_STAGES = {"hadamard"}


class TableColumn(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    label: str
    t_bell: Rational
    scenario: Optional[str] = None

    @property
    def is_baseline(self) -> bool:
        return self.scenario is not None


class TableCell(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    cycles: int
    exact: Rational


class TableRow(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    id: str
    name: str
    formula: str
    cells: Dict[str, Optional[TableCell]] = {}


class TableSection(BaseModel):
    title: str
    rows: List[TableRow] = []


class ResultsTable(BaseModel):
    columns: List[TableColumn]
    sections: List[TableSection]

    def cell(self, row_id: str, column: str) -> Optional[int]:
        for section in self.sections:
            for row in section.rows:
                if row.id == row_id:
                    value = row.cells.get(column)
                    return None if value is None else value.cycles
        raise KeyError(f"no row {row_id!r}")


def t_label(t: Fraction) -> str:
    return f"t={format_rational(t)}"


def table_columns(t_points: Sequence[Fraction], scenarios: Sequence[AVScenario]) -> List[TableColumn]:
    """Evaluation columns in T_Bell order, each baseline just before the matching T_Bell column."""
    columns = [TableColumn(label=t_label(Fraction(t)), t_bell=Fraction(t)) for t in t_points]
    columns += [TableColumn(label=s.label, t_bell=s.t_bell, scenario=s.label) for s in scenarios]
    return sorted(columns, key=lambda c: (c.t_bell, not c.is_baseline))


def _qfly_cells(stage: StageReport, columns: Sequence[TableColumn]) -> Dict[str, Optional[TableCell]]:
    cells: Dict[str, Optional[TableCell]] = {}
    for column in columns:
        if column.is_baseline:
            continue
        exact = evaluate(stage.cost, column.t_bell)
        cells[column.label] = TableCell(cycles=round_cycles(exact), exact=exact)
    return cells


def _baseline_cell(scenario: AVScenario, key: str, algorithm: Optional[Algorithm]) -> Optional[TableCell]:
    if key == "total" and algorithm is not None:
        keys = AV_STAGE_KEYS[algorithm]
        if any(k not in scenario.block_table for k in keys):
            return None
        exact = sum((av_time_exact(scenario.block_table[k], scenario) for k in keys), Fraction(0))
        return TableCell(cycles=round_cycles(exact), exact=exact)
    cycles = av_cycles(scenario, key)
    if cycles is None:
        return None
    return TableCell(cycles=cycles, exact=av_time_exact(scenario.block_table[key], scenario))


def _row(
    prefix: str,
    stage: StageReport,
    columns: Sequence[TableColumn],
    scenarios: Dict[str, AVScenario],
    algorithm: Optional[Algorithm] = None,
) -> TableRow:
    cells = _qfly_cells(stage, columns)
    for column in columns:
        if column.is_baseline:
            cells[column.label] = _baseline_cell(scenarios[column.label], stage.key, algorithm)
    ordered = {column.label: cells.get(column.label) for column in columns}
    return TableRow(id=f"{prefix}.{stage.key}", name=stage.name, formula=stage.formula, cells=ordered)


def core_subroutine_stages(config: RunConfig) -> List[StageReport]:
    hw, routing, sub = config.hardware, config.routing, config.subroutines
    priced = [
        ("gidney_adder", f"Gidney Adder ({sub.adder_bits}-bit)", gidney_adder(sub.adder_bits, routing.default, hw)),
        ("qcla_adder", f"QCLA (Sklansky, {sub.adder_bits}-bit)", qcla_adder(sub.adder_bits, routing.qcla, hw)),
        ("gridsynth_rotation", f"Gridsynth Rotation ({sub.precision_m}-bit)", gridsynth_rotation(sub.precision_m, hw)),
        (
            "dicke_unitary",
            f"Dicke State Unitary (k={sub.dicke_weight}, {sub.precision_m}-bit)",
            dicke_unitary(sub.dicke_weight, sub.precision_m, routing.default, hw, sub.double_rotation),
        ),
    ]
    return [make_stage(key, name, cost.formula, cost.cost, config.t_bell_points, cost.notes) for key, name, cost in priced]


def algorithm_reports(config: RunConfig) -> Dict[Algorithm, AlgorithmReport]:
    return {
        Algorithm.QAOA: qaoa_iteration(config.qaoa, config.topology, config.hardware, config.t_bell_points),
        Algorithm.DQI: dqi_total(config.dqi, config.hardware, config.routing, config.t_bell_points, config.subroutines),
    }


def build_results_table(config: RunConfig, scenarios: Sequence[AVScenario] = ()) -> ResultsTable:
    """Core subroutines, QAOA stages and DQI stages with their totals, for every column."""
    columns = table_columns(config.t_bell_points, scenarios)
    by_label = {s.label: s for s in scenarios}
    reports = algorithm_reports(config)

    core = TableSection(
        title="Core Subroutines",
        rows=[_row("core", stage, columns, by_label) for stage in core_subroutine_stages(config)],
    )
    qaoa, dqi = reports[Algorithm.QAOA], reports[Algorithm.DQI]
    sections = [core]
    for algorithm, report, title in (
        (Algorithm.QAOA, qaoa, f"QAOA Iteration Stages (n={config.qaoa.n_vars}, m={config.qaoa.n_clauses:,})"),
        (
            Algorithm.DQI,
            dqi,
            f"DQI Execution Stages (n={config.dqi.n_vars}, m={config.dqi.m_clauses}, l={config.dqi.weight_l})",
        ),
    ):
        prefix = algorithm.value
        rows = [
            _row(prefix, stage, columns, by_label, algorithm)
            for stage in report.stages
            if stage.key not in HIDDEN_STAGES
        ]
        rows.append(_row(prefix, report.total, columns, by_label, algorithm))
        sections.append(TableSection(title=title, rows=rows))
    return ResultsTable(columns=columns, sections=sections)
