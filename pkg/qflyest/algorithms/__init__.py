from .dqi import (
    decode_bell_slope,
    dqi_constraint_stage,
    dqi_decode_stage,
    dqi_dicke_stage,
    dqi_hadamard_stage,
    dqi_in_text_total,
    dqi_setup_unary_stage,
    dqi_total,
)
from .qaoa import (
    clause_round_cost,
    clause_rounds,
    qaoa_clause_stage,
    qaoa_fanout_stage,
    qaoa_in_text_total,
    qaoa_iteration,
    qaoa_mixer_stage,
)
from .stages import DEFAULT_T_POINTS, evaluate_cells, make_stage, total_stage

__all__ = [
    "DEFAULT_T_POINTS",
    "clause_round_cost",
    "clause_rounds",
    "decode_bell_slope",
    "dqi_constraint_stage",
    "dqi_decode_stage",
    "dqi_dicke_stage",
    "dqi_hadamard_stage",
    "dqi_in_text_total",
    "dqi_setup_unary_stage",
    "dqi_total",
    "evaluate_cells",
    "make_stage",
    "qaoa_clause_stage",
    "qaoa_fanout_stage",
    "qaoa_in_text_total",
    "qaoa_iteration",
    "qaoa_mixer_stage",
    "total_stage",
]
