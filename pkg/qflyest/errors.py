from typing import Dict, List, Optional


class QFlyError(Exception):
    """Base class for qflyest errors."""

    pass


class CostDomainError(QFlyError, ValueError):
    """Raised when a cost expression is used outside its T_Bell domain or with invalid inputs."""

    pass


class InvalidRoutingRatio(CostDomainError):
    """Raised when a routing ratio lies outside [0, 1]."""

    pass


class TopologyError(QFlyError, ValueError):
    """Raised when a topology is invalid, disconnected, or a route cannot be found."""

    pass


class LayoutError(QFlyError, ValueError):
    """Raised when an algorithm instance does not fit the topology layout."""

    pass


class ScheduleError(QFlyError):
    """Raised when a job graph cannot be scheduled or contradicts its analytic bound."""

    pass


class ConfigurationException(QFlyError):
    """Raised when there's an issue with a run configuration or scenario file."""

    pass


class FixtureMismatchError(QFlyError):
    """Raised when rendered cells deviate from the expected-values fixture."""

    def __init__(self, mismatches: List[Dict[str, object]], detail: Optional[str] = None):
        self.mismatches = mismatches
        super().__init__(detail or f"{len(mismatches)} cell(s) deviate from the expected values")
