from .algorithms import dqi_total, qaoa_iteration
from .costalgebra import CostExpr
from .datamodel import HardwareProfile, QFlyTopology, RunConfig
from .manager import ConfigManager
from .version import __version__

__all__ = [
    "ConfigManager",
    "CostExpr",
    "HardwareProfile",
    "QFlyTopology",
    "RunConfig",
    "__version__",
    "dqi_total",
    "qaoa_iteration",
]
