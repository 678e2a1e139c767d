from ..utils.rational import Rational, format_rational, parse_rational
from .schedule import Job, PipelineCheck, ResourcePool, Schedule
from .types import (
    Algorithm,
    AlgorithmReport,
    AVScenario,
    BroadcastMode,
    BroadcastSchedule,
    ComparisonRow,
    DQIInstance,
    EvaluatedCell,
    FanOutKind,
    HardwareProfile,
    OutputFormat,
    QAOAInstance,
    QFlyTopology,
    RoutePath,
    RoutingProfile,
    RunConfig,
    StageReport,
    SubroutineCost,
    SubroutineSettings,
    check_routing_ratio,
)

__all__ = [
    "Rational",
    "format_rational",
    "parse_rational",
    "Job",
    "PipelineCheck",
    "ResourcePool",
    "Schedule",
    "Algorithm",
    "AlgorithmReport",
    "AVScenario",
    "BroadcastMode",
    "BroadcastSchedule",
    "ComparisonRow",
    "DQIInstance",
    "EvaluatedCell",
    "FanOutKind",
    "HardwareProfile",
    "OutputFormat",
    "QAOAInstance",
    "QFlyTopology",
    "RoutePath",
    "RoutingProfile",
    "RunConfig",
    "StageReport",
    "SubroutineCost",
    "SubroutineSettings",
    "check_routing_ratio",
]
