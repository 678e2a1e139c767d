from .profile import (
    MICROSECONDS_PER_SECOND,
    PENALTY_RANGE,
    local_logical_cycle_us,
    logical_entanglement_rate,
    network_penalty,
)

__all__ = [
    "MICROSECONDS_PER_SECOND",
    "PENALTY_RANGE",
    "local_logical_cycle_us",
    "logical_entanglement_rate",
    "network_penalty",
]
