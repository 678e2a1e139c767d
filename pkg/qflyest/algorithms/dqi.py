"""
Full decoded quantum interferometry run on the Q-Fly layout.

Stages: phase gradient setup with unary encoding of the weight register, Dicke
state preparation, constraint encoding, syndrome decoding by coherent Gauss-Jordan
elimination, and the final Hadamard layer.
"""

import math
from typing import Optional, Sequence

from loguru import logger

from ..costalgebra import CostExpr, bell, constant, scale, sum_costs, zero
from ..datamodel import (
    Algorithm,
    AlgorithmReport,
    DQIInstance,
    HardwareProfile,
    RoutingProfile,
    StageReport,
    SubroutineSettings,
)
from ..subroutines import dicke_unitary, gridsynth_cycles, qcla_adder
from .stages import DEFAULT_T_POINTS, Number, make_stage, total_stage

UNARY_STEP_BELL = 2


def _defaults(hw: Optional[HardwareProfile], routing: Optional[RoutingProfile]):
    return hw or HardwareProfile(), routing or RoutingProfile()


def unary_step_cost(inst: DQIInstance, hw: HardwareProfile, routing: RoutingProfile) -> CostExpr:
    return bell(UNARY_STEP_BELL, hw.t_bell_domain) + qcla_adder(inst.precision_m, routing.qcla, hw).cost


def dqi_setup_unary_stage(
    inst: DQIInstance,
    hw: Optional[HardwareProfile] = None,
    routing: Optional[RoutingProfile] = None,
    t_points: Sequence[Number] = DEFAULT_T_POINTS,
) -> StageReport:
    """Gradient-state preparation plus l - 1 QCLA-driven unary encoding steps."""
    hw, routing = _defaults(hw, routing)
    prep = gridsynth_cycles(inst.precision_m, hw)
    steps = inst.weight_l - 1
    cost = constant(prep, hw.t_bell_domain) + scale(unary_step_cost(inst, hw, routing), steps)
    return make_stage(
        "setup_unary",
        "Setup & Unary Encoding",
        f"{prep} + {steps}(2·T_Bell + T_QCLA)",
        cost,
        t_points,
    )


def dqi_dicke_stage(
    inst: DQIInstance,
    hw: Optional[HardwareProfile] = None,
    routing: Optional[RoutingProfile] = None,
    t_points: Sequence[Number] = DEFAULT_T_POINTS,
    double_rotation: bool = False,
) -> StageReport:
    hw, routing = _defaults(hw, routing)
    dicke = dicke_unitary(inst.weight_l, inst.precision_m, routing.default, hw, double_rotation=double_rotation)
    return make_stage(
        "dicke",
        f"Dicke Preparation (l={inst.weight_l})",
        dicke.formula,
        dicke.cost,
        t_points,
        notes=dicke.notes,
    )


def dqi_constraint_stage(
    inst: DQIInstance, hw: Optional[HardwareProfile] = None, t_points: Sequence[Number] = DEFAULT_T_POINTS
) -> StageReport:
    """Up to two cross-node Bell pairs per clause."""
    hw = hw or HardwareProfile()
    slope = 2 * inst.m_clauses
    return make_stage(
        "constraint_encoding",
        "Constraint Encoding",
        f"2m·T_Bell = {slope}·T_Bell",
        bell(slope, hw.t_bell_domain),
        t_points,
    )


def decode_bell_slope(inst: DQIInstance) -> int:
    """(2(2n + n⌈m/c⌉) + n) for c clause qubits per node."""
    n = inst.n_vars
    packed = math.ceil(inst.m_clauses / inst.clause_qubits_per_node)
    return 2 * (2 * n + n * packed) + n


def dqi_decode_stage(
    inst: DQIInstance, hw: Optional[HardwareProfile] = None, t_points: Sequence[Number] = DEFAULT_T_POINTS
) -> StageReport:
    hw = hw or HardwareProfile()
    slope = decode_bell_slope(inst)
    return make_stage(
        "syndrome_decoding",
        "Syndrome Decoding",
        f"{slope}·T_Bell",
        bell(slope, hw.t_bell_domain),
        t_points,
        notes="Gauss-Jordan elimination bound",
    )


def dqi_hadamard_stage(
    inst: DQIInstance, hw: Optional[HardwareProfile] = None, t_points: Sequence[Number] = DEFAULT_T_POINTS
) -> StageReport:
    """Binary inverse QFT is a transversal Hadamard layer."""
    hw = hw or HardwareProfile()
    return make_stage(
        "hadamard", "Hadamard Transform", "0", zero(hw.t_bell_domain), t_points, notes=f"{inst.n_vars} parallel Hadamards"
    )


def dqi_total(
    inst: Optional[DQIInstance] = None,
    hw: Optional[HardwareProfile] = None,
    routing: Optional[RoutingProfile] = None,
    t_points: Sequence[Number] = DEFAULT_T_POINTS,
    settings: Optional[SubroutineSettings] = None,
) -> AlgorithmReport:
    inst = inst or DQIInstance()
    hw, routing = _defaults(hw, routing)
    double_rotation = settings.double_rotation if settings is not None else False
    stages = [
        dqi_setup_unary_stage(inst, hw, routing, t_points),
        dqi_dicke_stage(inst, hw, routing, t_points, double_rotation=double_rotation),
        dqi_constraint_stage(inst, hw, t_points),
        dqi_decode_stage(inst, hw, t_points),
        dqi_hadamard_stage(inst, hw, t_points),
    ]
    total = total_stage("total", "Total DQI Execution", stages, t_points)
    logger.debug(f"DQI with n={inst.n_vars}, m={inst.m_clauses}, l={inst.weight_l}: {total.cost.render()}")
    return AlgorithmReport(algorithm=Algorithm.DQI, stages=stages, total=total)


def dqi_in_text_total(
    inst: Optional[DQIInstance] = None, hw: Optional[HardwareProfile] = None, routing: Optional[RoutingProfile] = None
) -> CostExpr:
    """
    Alternative single-expression DQI total.

    Uses n - 1 unary steps where the stage decomposition uses l - 1, and a combined
    Bell term for constraint encoding and decoding. Reference only.
    """
    inst = inst or DQIInstance()
    hw, routing = _defaults(hw, routing)
    domain = hw.t_bell_domain
    n, m = inst.n_vars, inst.m_clauses
    packed = math.ceil(m / inst.clause_qubits_per_node)
    dicke = dicke_unitary(inst.weight_l, inst.precision_m, routing.default, hw)
    return sum_costs(
        [
            constant(gridsynth_cycles(inst.precision_m, hw), domain),
            scale(unary_step_cost(inst, hw, routing), n - 1),
            dicke.cost,
            bell(2 * m + 5 * n + 2 * n * packed, domain),
        ],
        domain,
    )

