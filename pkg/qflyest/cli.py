import asyncio
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, NoReturn, Optional, Tuple

import click
import typer
from loguru import logger
from typing_extensions import Annotated

from .algorithms import dqi_total, qaoa_iteration
from .baseline import compare_totals, load_scenario, packaged_scenario_paths
from .config import Settings
from .costalgebra import evaluate, round_cycles
from .datamodel import (
    Algorithm,
    AlgorithmReport,
    AVScenario,
    BroadcastMode,
    OutputFormat,
    RunConfig,
    check_routing_ratio,
    parse_rational,
)
from .errors import ConfigurationException, CostDomainError, FixtureMismatchError, LayoutError, ScheduleError, TopologyError
from .manager import ConfigManager
from .pipesim import validate_analytic
from .report import (
    FIXTURE_T_POINTS,
    build_results_table,
    check_fixture,
    render_algorithm_report,
    render_comparison,
    render_mapping,
    render_pipeline_checks,
    render_results_table,
    render_series,
)
from .subroutines import phase_gradient_rotation, rotation_crossover
from .topology import analytic_broadcast_cost, broadcast_rounds, build_topology, diameter, switch_ports
from .utils import format_rational
from .validation import ValidationService
from .version import APP_NAME, VERSION

EXIT_USAGE = 1
EXIT_CONFIG = 2
EXIT_MISMATCH = 3

app = typer.Typer(help="Logical-cycle resource estimates for distributed QAOA and DQI on Q-Fly.")

ConfigOption = Annotated[Optional[Path], typer.Option("--config", help="Run configuration (YAML or JSON).")]
FormatOption = Annotated[Optional[OutputFormat], typer.Option("--format", help="Output format.")]
TBellOption = Annotated[Optional[str], typer.Option("--t-bell", help="Comma-separated T_Bell evaluation points.")]
VerboseOption = Annotated[bool, typer.Option("--verbose", "-v", help="Log debug output to stderr.")]


def _fail(message: str, code: int) -> NoReturn:
    typer.echo(f"Error: {message}", err=True)
    raise typer.Exit(code)


def _configure_logging(settings: Settings, verbose: bool) -> None:
    logger.remove()
    # resolve sys.stderr per message so redirected streams are honoured
    logger.add(lambda message: sys.stderr.write(message), level="DEBUG" if verbose else settings.LOG_LEVEL.upper())


def _parse_points(text: str) -> List[Fraction]:
    try:
        return [parse_rational(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        _fail(f"Invalid --t-bell value {text!r}: {e}", EXIT_USAGE)


def _setup(
    config: Optional[Path], fmt: Optional[OutputFormat], t_bell: Optional[str], verbose: bool
) -> Tuple[RunConfig, OutputFormat, Optional[Path], Settings]:
    """Configure logging and load the run configuration with command-line overrides applied."""
    settings = Settings()
    _configure_logging(settings, verbose)
    config_path = config or (Path(settings.CONFIG_FILE) if settings.CONFIG_FILE else None)
    try:
        run_config = asyncio.run(ConfigManager.load_run_config(config_path))
        if t_bell:
            run_config = RunConfig.model_validate({**dict(run_config), "t_bell_points": _parse_points(t_bell)})
    except ConfigurationException as e:
        _fail(str(e), EXIT_CONFIG)
    except ValueError as e:
        _fail(f"Invalid --t-bell points: {e}", EXIT_CONFIG)

    if fmt is not None:
        output_format = fmt
    elif config_path is not None:
        output_format = run_config.output_format
    else:
        output_format = settings.OUTPUT_FORMAT
    return run_config, output_format, config_path, settings


async def _load_scenarios(paths: List[Path]) -> List[AVScenario]:
    return list(await asyncio.gather(*(load_scenario(path) for path in paths)))


def _scenarios(run_config: RunConfig, config_path: Optional[Path], settings: Settings) -> List[AVScenario]:
    if run_config.av_scenarios:
        paths = ConfigManager.resolve_scenario_paths(run_config, config_path, settings.SCENARIO_DIR)
    else:
        paths = packaged_scenario_paths()
    try:
        return asyncio.run(_load_scenarios(paths))
    except ConfigurationException as e:
        _fail(str(e), EXIT_CONFIG)


def _report(algorithm: Algorithm, run_config: RunConfig) -> AlgorithmReport:
    try:
        if algorithm == Algorithm.QAOA:
            return qaoa_iteration(run_config.qaoa, run_config.topology, run_config.hardware, run_config.t_bell_points)
        return dqi_total(
            run_config.dqi, run_config.hardware, run_config.routing, run_config.t_bell_points, run_config.subroutines
        )
    except LayoutError as e:
        _fail(str(e), EXIT_CONFIG)


@app.command()
def estimate(
    algorithm: Annotated[Algorithm, typer.Argument(help="Algorithm to estimate.")],
    config: ConfigOption = None,
    fmt: FormatOption = None,
    t_bell: TBellOption = None,
    verbose: VerboseOption = False,
):
    """
    Print the stage-by-stage cost of one QAOA iteration or one DQI run.
    """
    run_config, output_format, _, _ = _setup(config, fmt, t_bell, verbose)
    typer.echo(render_algorithm_report(_report(algorithm, run_config), output_format))


@app.command()
def table(
    check: Annotated[bool, typer.Option("--check", help="Compare every cell with the pinned reference values.")] = False,
    config: ConfigOption = None,
    fmt: FormatOption = None,
    t_bell: TBellOption = None,
    verbose: VerboseOption = False,
):
    """
    Print the results table: core subroutines, QAOA stages and DQI stages with the
    active-volume baselines whose T_Bell is among the evaluation points.
    """
    run_config, output_format, config_path, settings = _setup(config, fmt, t_bell, verbose)
    scenarios = _scenarios(run_config, config_path, settings)
    points = set(run_config.t_bell_points)
    shown = [s for s in scenarios if s.t_bell in points]
    try:
        results = build_results_table(run_config, shown)
    except LayoutError as e:
        _fail(str(e), EXIT_CONFIG)
    typer.echo(render_results_table(results, output_format))

    if not check:
        return
    if points != {Fraction(t) for t in FIXTURE_T_POINTS}:
        logger.warning("Reference check needs T_Bell points 2, 5, 10; skipped")
        return
    try:
        checked = check_fixture(results)
    except FixtureMismatchError as e:
        for m in e.mismatches:
            typer.echo(f"Mismatch {m['row']} [{m['column']}]: expected {m['expected']}, got {m['actual']}", err=True)
        raise typer.Exit(EXIT_MISMATCH)
    logger.info(f"All {checked} reference cells match")


@app.command()
def sweep(
    algorithm: Annotated[Algorithm, typer.Argument(help="Algorithm to sweep.")],
    start: Annotated[Optional[str], typer.Option("--from", help="First T_Bell (default: domain start).")] = None,
    stop: Annotated[Optional[str], typer.Option("--to", help="Last T_Bell (default: domain end).")] = None,
    step: Annotated[str, typer.Option("--step", help="T_Bell increment.")] = "1",
    config: ConfigOption = None,
    fmt: FormatOption = None,
    t_bell: TBellOption = None,
    verbose: VerboseOption = False,
):
    """
    Every stage and the total versus T_Bell, for plotting.
    """
    run_config, output_format, _, _ = _setup(config, fmt, t_bell, verbose)
    lo, hi = run_config.hardware.t_bell_domain
    try:
        first = parse_rational(start) if start is not None else lo
        last = parse_rational(stop) if stop is not None else hi
        increment = parse_rational(step)
    except ValueError as e:
        _fail(str(e), EXIT_USAGE)
    if increment <= 0:
        _fail(f"--step must be positive, got {step}", EXIT_USAGE)
    if not (lo <= first <= last <= hi):
        _fail(
            f"sweep range [{format_rational(first)}, {format_rational(last)}] outside domain "
            f"[{format_rational(lo)}, {format_rational(hi)}]",
            EXIT_USAGE,
        )

    report = _report(algorithm, run_config)
    stages = [*report.stages, report.total]
    rows = []
    t = first
    while t <= last:
        rows.append([t, *(round_cycles(evaluate(stage.cost, t)) for stage in stages)])
        t += increment
    typer.echo(render_series(["t_bell", *(stage.key for stage in stages)], rows, output_format, "sweep"))


@app.command()
def crossover(
    r: Annotated[str, typer.Option("--r", help="Routing ratio of the phase-gradient adder.")] = "1",
    config: ConfigOption = None,
    fmt: FormatOption = None,
    t_bell: TBellOption = None,
    verbose: VerboseOption = False,
):
    """
    Smallest rotation precision where phase-gradient phasing beats gridsynth, per T_Bell point.
    """
    run_config, output_format, _, _ = _setup(config, fmt, t_bell, verbose)
    hw = run_config.hardware
    try:
        ratio = check_routing_ratio(r)
    except ValueError as e:
        _fail(f"Invalid --r value {r!r}: {e}", EXIT_USAGE)

    rows = []
    for point in run_config.t_bell_points:
        try:
            m = rotation_crossover(ratio, point, hw)
        except CostDomainError as e:
            _fail(str(e), EXIT_USAGE)
        row = [point, m]
        for precision in (m - 1, m):
            if precision < 1:
                row += [None, None]
                continue
            row += [
                hw.gridsynth_a + hw.gridsynth_b * precision,
                evaluate(phase_gradient_rotation(precision, ratio, hw).cost, point),
            ]
        rows.append(row)
    headers = ["t_bell", "crossover_m", "gridsynth_m_minus_1", "gradient_m_minus_1", "gridsynth_m", "gradient_m"]
    typer.echo(render_series(headers, rows, output_format, "crossover"))


@app.command()
def topology(
    num_groups: Annotated[Optional[int], typer.Option("--num-groups", help="Override the number of groups.")] = None,
    nodes_per_group: Annotated[Optional[int], typer.Option("--nodes-per-group", help="Override nodes per group.")] = None,
    offsets: Annotated[Optional[str], typer.Option("--offsets", help="Override offsets, comma-separated.")] = None,
    config: ConfigOption = None,
    fmt: FormatOption = None,
    t_bell: TBellOption = None,
    verbose: VerboseOption = False,
):
    """
    Diameter, switch ports, duplex offsets and broadcast schedules of the topology.
    """
    run_config, output_format, _, _ = _setup(config, fmt, t_bell, verbose)
    base = run_config.topology
    try:
        topo = build_topology(
            num_groups=num_groups if num_groups is not None else base.num_groups,
            nodes_per_group=nodes_per_group if nodes_per_group is not None else base.nodes_per_group,
            offsets=[int(o) for o in offsets.split(",")] if offsets else base.offsets,
            logical_compute_per_node=base.logical_compute_per_node,
            logical_extractor_per_node=base.logical_extractor_per_node,
            physical_per_node=base.physical_per_node,
        )
        source_limited = broadcast_rounds(topo, BroadcastMode.SOURCE_LIMITED)
        relaying = broadcast_rounds(topo, BroadcastMode.RELAYING)
        data = {
            "num_groups": topo.num_groups,
            "nodes_per_group": topo.nodes_per_group,
            "offsets": ",".join(str(o) for o in topo.offsets),
            "duplex_offsets": ",".join(str(o) for o in topo.duplex_offsets),
            "diameter": diameter(topo),
            "switch_ports": switch_ports(topo),
            "compute_qubits": topo.compute_qubits,
            "total_logical_qubits": topo.total_logical_qubits,
            "source_limited_rounds": source_limited.num_rounds,
            "relaying_rounds": relaying.num_rounds,
            "broadcast_bell_slope": analytic_broadcast_cost(topo, run_config.hardware.t_bell_domain).terms[0].slope,
        }
    except (TopologyError, ValueError) as e:
        _fail(str(e), EXIT_CONFIG)

    if output_format == OutputFormat.JSON:
        data["schedules"] = {
            schedule.mode.value: [[list(send) for send in sends] for sends in schedule.rounds]
            for schedule in (source_limited, relaying)
        }
    typer.echo(render_mapping(data, output_format, "topology"))


@app.command()
def validate(
    config: ConfigOption = None,
    fmt: FormatOption = None,
    t_bell: TBellOption = None,
    verbose: VerboseOption = False,
):
    """
    Check the hardware profile and instances, then simulate the clause pipeline
    against its analytic per-round cost.
    """
    run_config, output_format, _, _ = _setup(config, fmt, t_bell, verbose)
    findings = (
        ValidationService.validate_profile(run_config.hardware)
        .merge(ValidationService.validate_qaoa_layout(run_config.qaoa, run_config.topology))
        .merge(ValidationService.validate_dqi_instance(run_config.dqi, run_config.topology))
    )
    for error in findings.errors:
        typer.echo(f"Violation [{error.field}]: {error.error}", err=True)
    for warning in findings.warnings:
        typer.echo(f"Warning [{warning.field}]: {warning.error}", err=True)
    if not findings.is_valid:
        raise typer.Exit(EXIT_CONFIG)

    try:
        checks = validate_analytic(run_config.qaoa, run_config.hardware, run_config.t_bell_points, run_config.topology)
    except ScheduleError as e:
        _fail(str(e), EXIT_MISMATCH)
    typer.echo(render_pipeline_checks(checks, output_format))


@app.command()
def compare(
    multiplier: Annotated[str, typer.Option("--multiplier", help="Hardware multiplier granted to the baseline.")] = "10",
    config: ConfigOption = None,
    fmt: FormatOption = None,
    t_bell: TBellOption = None,
    verbose: VerboseOption = False,
):
    """
    Q-Fly totals against each active-volume baseline, plain and with scaled hardware.
    """
    run_config, output_format, config_path, settings = _setup(config, fmt, t_bell, verbose)
    try:
        factor = parse_rational(multiplier)
    except ValueError as e:
        _fail(str(e), EXIT_USAGE)
    if factor <= 0:
        _fail(f"--multiplier must be positive, got {multiplier}", EXIT_USAGE)
    scenarios = _scenarios(run_config, config_path, settings)
    reports = {algorithm: _report(algorithm, run_config) for algorithm in Algorithm}
    try:
        rows = compare_totals(reports, scenarios, factor)
    except CostDomainError as e:
        _fail(str(e), EXIT_CONFIG)
    typer.echo(render_comparison(rows, output_format))


@app.command()
def version():
    """
    Print the version of the qflyest CLI.
    """
    typer.echo(f"{APP_NAME} version: {VERSION}")


def run():
    try:
        code = typer.main.get_command(app).main(standalone_mode=False)
    except click.UsageError as e:
        e.show()
        sys.exit(EXIT_USAGE)
    except click.Abort:
        sys.exit(EXIT_USAGE)
    sys.exit(code if isinstance(code, int) else 0)


if __name__ == "__main__":
    run()
