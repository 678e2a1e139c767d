import math
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, computed_field, field_validator, model_validator

from ..costalgebra import CostExpr
from ..errors import InvalidRoutingRatio
from ..utils.rational import Rational, parse_rational


class OutputFormat(str, Enum):
    MARKDOWN = "markdown"
    CSV = "csv"
    JSON = "json"


class Algorithm(str, Enum):
    QAOA = "qaoa"
    DQI = "dqi"


class BroadcastMode(str, Enum):
    SOURCE_LIMITED = "source-limited"
    RELAYING = "relaying"


class FanOutKind(str, Enum):
    INTRA_GROUP = "intra-group"
    INTER_NODE = "inter-node"


def check_routing_ratio(value: object) -> Fraction:
    """Parse a routing ratio and require 0 <= r <= 1."""
    ratio = parse_rational(value)
    if not 0 <= ratio <= 1:
        raise InvalidRoutingRatio(f"routing ratio must lie in [0, 1], got {ratio}")
    return ratio


class HardwareProfile(BaseModel):
    """
    Timing constants of the distributed architecture.

    Construction only checks types; invariant violations are reported as findings by
    ValidationService.validate_profile so a bad profile can still be inspected.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    t_bell_domain: Tuple[Rational, Rational] = (Fraction(2), Fraction(10))
    t_toff: int = 4
    gridsynth_a: Rational = Fraction(919, 100)
    gridsynth_b: Rational = Fraction(3)
    code_cycle_us: Rational = Fraction(1)
    code_distance: int = 6
    raw_bell_rate_hz: Rational = Fraction(100000)
    distillation_yield: Rational = Fraction(1, 3)
    t_states_per_node_per_cycle: int = 1

    @classmethod
    def for_penalty(cls, penalty: int | Fraction) -> "HardwareProfile":
        """Default-rate profile whose code distance gives the requested network penalty."""
        distance = Fraction(30) / Fraction(penalty)
        if distance.denominator != 1:
            raise ValueError(f"no integral code distance yields penalty {penalty} at default rates")
        return cls(code_distance=int(distance))


class RoutingProfile(BaseModel):
    """Bell pairs consumed per Toffoli for cross-node operation."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    qcla: Rational = Fraction(1)
    default: Rational = Fraction(1, 3)

    @field_validator("qcla", "default")
    @classmethod
    def validate_ratio(cls, v: Fraction) -> Fraction:
        return check_routing_ratio(v)


class SubroutineSettings(BaseModel):
    """Parameters of the core-subroutine rows of the results table."""

    model_config = ConfigDict(frozen=True)

    adder_bits: int = Field(default=64, ge=1)
    precision_m: int = Field(default=64, ge=1)
    dicke_weight: int = Field(default=25, ge=1)
    double_rotation: bool = False


class QFlyTopology(BaseModel):
    """Two-level Q-Fly layout: switched groups of nodes joined by a circulant inter-group graph."""

    model_config = ConfigDict(frozen=True)

    num_groups: int = Field(default=64, ge=2)
    nodes_per_group: int = Field(default=12, ge=1)
    offsets: Tuple[int, ...] = (1, 2, 4, 8, 16, 32)
    logical_compute_per_node: int = Field(default=9, ge=1)
    logical_extractor_per_node: int = Field(default=1, ge=0)
    physical_per_node: int = Field(default=1000, ge=1)

    @field_validator("offsets")
    @classmethod
    def validate_offsets(cls, v: Tuple[int, ...], info: ValidationInfo) -> Tuple[int, ...]:
        if not v:
            raise ValueError("at least one inter-group offset is required")
        if len(set(v)) != len(v):
            raise ValueError(f"duplicate offsets in {list(v)}")
        num_groups = info.data.get("num_groups")
        if num_groups is not None:
            for offset in v:
                if not 1 <= offset <= num_groups - 1:
                    raise ValueError(f"offset {offset} outside [1, {num_groups - 1}]")
        return tuple(sorted(v))

    @property
    def duplex_offsets(self) -> List[int]:
        return [o for o in self.offsets if (2 * o) % self.num_groups == 0]

    @property
    def compute_qubits(self) -> int:
        return self.num_groups * self.nodes_per_group * self.logical_compute_per_node

    @property
    def total_logical_qubits(self) -> int:
        return self.num_groups * self.nodes_per_group * (self.logical_compute_per_node + self.logical_extractor_per_node)


class RoutePath(BaseModel):
    model_config = ConfigDict(frozen=True)

    groups: List[int]

    @computed_field
    @property
    def hop_count(self) -> int:
        return len(self.groups) - 1


class BroadcastSchedule(BaseModel):
    """Round-based fan-out of one value from a root group to every group."""

    root: int
    mode: BroadcastMode
    rounds: List[List[Tuple[int, int]]] = []

    @computed_field
    @property
    def num_rounds(self) -> int:
        return len(self.rounds)


class QAOAInstance(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n_vars: int = Field(default=64, ge=1)
    clause_ratio: Rational = Fraction(176)
    precision_m: int = Field(default=64, ge=1)
    p_iterations: int = Field(default=1, ge=1)
    vars_per_node: int = Field(default=7, ge=1)

    @field_validator("clause_ratio")
    @classmethod
    def validate_clause_ratio(cls, v: Fraction) -> Fraction:
        if v < 0:
            raise ValueError("clause_ratio must be non-negative")
        return v

    @property
    def n_clauses(self) -> int:
        return math.ceil(self.n_vars * self.clause_ratio)


class DQIInstance(BaseModel):
    model_config = ConfigDict(frozen=True)

    n_vars: int = Field(default=50, ge=1)
    m_clauses: int = Field(default=200, ge=0)
    weight_l: int = Field(default=25, ge=1)
    precision_m: int = Field(default=64, ge=1)
    clause_qubits_per_node: int = Field(default=9, ge=1)


class SubroutineCost(BaseModel):
    """A priced primitive with the formula it came from."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    formula: str
    cost: CostExpr
    toffoli_count: Optional[int] = None
    bell_slope: Rational = Fraction(0)
    notes: str = ""


class EvaluatedCell(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    t_bell: Rational
    exact: Rational
    cycles: int


class StageReport(BaseModel):
    """One row of a results table: a named stage cost and its evaluations."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    key: str
    name: str
    formula: str
    cost: CostExpr
    evaluated: List[EvaluatedCell] = []
    bell_slope: Rational = Fraction(0)
    notes: str = ""

    def cycles_at(self, t_bell: Fraction | int) -> int:
        for cell in self.evaluated:
            if cell.t_bell == t_bell:
                return cell.cycles
        raise KeyError(f"stage {self.key} was not evaluated at T_Bell={t_bell}")


class AlgorithmReport(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    algorithm: Algorithm
    stages: List[StageReport]
    total: StageReport

    def stage(self, key: str) -> StageReport:
        for stage in self.stages:
            if stage.key == key:
                return stage
        raise KeyError(f"no stage {key!r} in {self.algorithm.value} report")


class AVScenario(BaseModel):
    """Active-volume baseline: block counts processed at a fixed per-cycle throughput."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    label: str
    t_bell: Rational
    blocks_per_cycle: Rational = Fraction(384)
    block_table: Dict[str, Rational] = {}

    @field_validator("blocks_per_cycle", "t_bell")
    @classmethod
    def validate_positive(cls, v: Fraction) -> Fraction:
        if v <= 0:
            raise ValueError("must be positive")
        return v

    @field_validator("block_table")
    @classmethod
    def validate_blocks(cls, v: Dict[str, Fraction]) -> Dict[str, Fraction]:
        for key, blocks in v.items():
            if blocks < 0:
                raise ValueError(f"block count for {key!r} is negative")
        return v


class ComparisonRow(BaseModel):
    """Q-Fly total against an active-volume baseline at the baseline's T_Bell."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    algorithm: Algorithm
    scenario: str
    t_bell: Rational
    qfly_cycles: int
    av_cycles: int
    av_scaled_cycles: int
    multiplier: Rational
    speedup: Rational
    scaled_speedup: Rational


class RunConfig(BaseModel):
    """Everything one invocation needs; each section falls back to its defaults."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    hardware: HardwareProfile = HardwareProfile()
    topology: QFlyTopology = QFlyTopology()
    routing: RoutingProfile = RoutingProfile()
    subroutines: SubroutineSettings = SubroutineSettings()
    qaoa: QAOAInstance = QAOAInstance()
    dqi: DQIInstance = DQIInstance()
    av_scenarios: List[str] = []
    output_format: OutputFormat = OutputFormat.MARKDOWN
    t_bell_points: List[Rational] = [Fraction(2), Fraction(5), Fraction(10)]

    @model_validator(mode="after")
    def validate_t_bell_points(self) -> "RunConfig":
        lo, hi = self.hardware.t_bell_domain
        for t in self.t_bell_points:
            if not lo <= t <= hi:
                raise ValueError(f"T_Bell point {t} outside domain [{lo}, {hi}]")
        if not self.t_bell_points:
            raise ValueError("at least one T_Bell evaluation point is required")
        return self
