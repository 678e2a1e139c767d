from typing import Dict, FrozenSet

from pydantic import BaseModel, ConfigDict, Field

from ..utils.rational import Rational


class Job(BaseModel):
    """A unit of work with a fixed duration, pooled resource demands and predecessors."""

    model_config = ConfigDict(frozen=True)

    id: str
    duration: int = Field(ge=0)
    demands: Dict[str, int] = {}
    predecessors: FrozenSet[str] = frozenset()
    label: str = ""


class ResourcePool(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    capacity: int = Field(ge=1)


class Schedule(BaseModel):
    starts: Dict[str, int] = {}
    makespan: int = 0


class PipelineCheck(BaseModel):
    """Simulated clause pipeline against the analytic per-round cost at one T_Bell."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    t_bell: Rational
    rounds: int
    simulated_per_round: int
    analytic_per_round: int
    simulated_makespan: int
    analytic_stage: int
    startup: int
    slack: int
