from .costs import (
    CROSSOVER_GUARD,
    QAOA_MCT_CONTROLS,
    QAOA_MCT_TOFFOLIS,
    ccr_tacu,
    ceil_log2,
    controlled_rotation,
    dicke_depth,
    dicke_unitary,
    fan_out,
    fastest_rotation,
    gidney_adder,
    gridsynth_cycles,
    gridsynth_rotation,
    linear_phasing,
    local_mct,
    phase_gradient_rotation,
    qcla_adder,
    rotation_crossover,
    toffoli_step,
)

__all__ = [
    "CROSSOVER_GUARD",
    "QAOA_MCT_CONTROLS",
    "QAOA_MCT_TOFFOLIS",
    "ccr_tacu",
    "ceil_log2",
    "controlled_rotation",
    "dicke_depth",
    "dicke_unitary",
    "fan_out",
    "fastest_rotation",
    "gidney_adder",
    "gridsynth_cycles",
    "gridsynth_rotation",
    "linear_phasing",
    "local_mct",
    "phase_gradient_rotation",
    "qcla_adder",
    "rotation_crossover",
    "toffoli_step",
]
