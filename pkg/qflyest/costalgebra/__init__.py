from .expr import (
    DEFAULT_DOMAIN,
    AffineTerm,
    CostExpr,
    CycleCount,
    add,
    affine,
    bell,
    constant,
    crossover_t,
    evaluate,
    max_of,
    round_cycles,
    scale,
    slope_at,
    sum_costs,
    zero,
)

__all__ = [
    "DEFAULT_DOMAIN",
    "AffineTerm",
    "CostExpr",
    "CycleCount",
    "add",
    "affine",
    "bell",
    "constant",
    "crossover_t",
    "evaluate",
    "max_of",
    "round_cycles",
    "scale",
    "slope_at",
    "sum_costs",
    "zero",
]
