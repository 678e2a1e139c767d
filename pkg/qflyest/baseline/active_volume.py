"""
Active-volume surface-code baseline.

Time is block count over throughput: a scenario processes blocks_per_cycle logical
blocks per active-volume cycle, and one such cycle takes T_Bell logical cycles.
"""

from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import yaml
from loguru import logger

from ..costalgebra import evaluate, round_cycles
from ..datamodel import Algorithm, AlgorithmReport, AVScenario, ComparisonRow
from ..errors import ConfigurationException
from ..manager import ConfigManager

Number = Union[int, Fraction]

SCENARIO_DIR = Path(__file__).parent / "scenarios"
PACKAGED_SCENARIOS = ("av_2.yaml", "av_10.yaml")

AV_STAGE_KEYS: Dict[Algorithm, Tuple[str, ...]] = {
    Algorithm.QAOA: ("clause_evaluation", "mixer"),
    Algorithm.DQI: ("setup_unary", "dicke", "constraint_encoding", "syndrome_decoding"),
}


def av_time_exact(blocks: Number, scenario: AVScenario) -> Fraction:
    if blocks < 0:
        raise ValueError(f"block count must be non-negative, got {blocks}")
    return Fraction(blocks) / scenario.blocks_per_cycle * scenario.t_bell


def av_time(blocks: Number, scenario: AVScenario) -> int:
    """Blocks over per-cycle throughput, in logical cycles, rounded half up."""
    return round_cycles(av_time_exact(blocks, scenario))


def av_cycles(scenario: AVScenario, key: str) -> Optional[int]:
    """Cycles for one table row, or None when the scenario has no block count for it."""
    blocks = scenario.block_table.get(key)
    return None if blocks is None else av_time(blocks, scenario)


def av_stage_table(scenario: AVScenario, algorithm: Algorithm) -> List[Tuple[str, int]]:
    """
    Per-stage baseline cycles followed by a ("total", cycles) row.

    The total rounds the exact sum, not the sum of rounded stages.

    Raises:
        ConfigurationException: if a stage of the algorithm has no block count.
    """
    keys = AV_STAGE_KEYS[algorithm]
    missing = [key for key in keys if key not in scenario.block_table]
    if missing:
        raise ConfigurationException(f"Scenario {scenario.label} has no block count for {', '.join(missing)}")

    rows = [(key, av_time(scenario.block_table[key], scenario)) for key in keys]
    exact = sum((av_time_exact(scenario.block_table[key], scenario) for key in keys), Fraction(0))
    rows.append(("total", round_cycles(exact)))
    return rows


def av_total(scenario: AVScenario, algorithm: Algorithm) -> int:
    return av_stage_table(scenario, algorithm)[-1][1]


def av_scale_scenario(scenario: AVScenario, hardware_multiplier: Number) -> AVScenario:
    """Grant the baseline more hardware: throughput scales, block counts do not."""
    multiplier = Fraction(hardware_multiplier)
    if multiplier <= 0:
        raise ValueError(f"hardware multiplier must be positive, got {hardware_multiplier}")
    if multiplier == 1:
        return scenario
    return scenario.model_copy(
        update={
            "label": f"{scenario.label}x{multiplier}",
            "blocks_per_cycle": scenario.blocks_per_cycle * multiplier,
        }
    )


def compare_totals(
    reports: Mapping[Algorithm, AlgorithmReport], scenarios: Sequence[AVScenario], multiplier: Number = 10
) -> List[ComparisonRow]:
    """Q-Fly totals against every scenario that prices the algorithm, plain and scaled."""
    rows: List[ComparisonRow] = []
    for algorithm, report in reports.items():
        for scenario in scenarios:
            if any(key not in scenario.block_table for key in AV_STAGE_KEYS[algorithm]):
                logger.debug(f"Scenario {scenario.label} does not price {algorithm.value}; skipped")
                continue
            qfly = round_cycles(evaluate(report.total.cost, scenario.t_bell))
            av = av_total(scenario, algorithm)
            scaled = av_total(av_scale_scenario(scenario, multiplier), algorithm)
            rows.append(
                ComparisonRow(
                    algorithm=algorithm,
                    scenario=scenario.label,
                    t_bell=scenario.t_bell,
                    qfly_cycles=qfly,
                    av_cycles=av,
                    av_scaled_cycles=scaled,
                    multiplier=Fraction(multiplier),
                    speedup=Fraction(av, qfly) if qfly else Fraction(0),
                    scaled_speedup=Fraction(scaled, qfly) if qfly else Fraction(0),
                )
            )
    return rows


def packaged_scenario_paths() -> List[Path]:
    return [SCENARIO_DIR / name for name in PACKAGED_SCENARIOS]


async def load_scenario(path: Union[str, Path]) -> AVScenario:
    """
    Read an AVScenario from a YAML or JSON file.

    Raises:
        ConfigurationException: if the file is missing or malformed.
    """
    try:
        data = await ConfigManager.load_from_file(path)
        return AVScenario.model_validate(data)
    except FileNotFoundError as e:
        raise ConfigurationException(f"AV scenario file not found: {path}") from e
    except (ValueError, yaml.YAMLError) as e:
        # pydantic.ValidationError is a ValueError
        raise ConfigurationException(f"Invalid AV scenario {path}: {e}") from e
