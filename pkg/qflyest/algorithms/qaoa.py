"""
One QAOA iteration for MAX-3-SAT on the Q-Fly layout.

Variable j lives in group j. Each iteration fans the variables out to every group,
evaluates the clauses group-parallel in sequential rounds, then applies the mixer.
"""

import math
from typing import Optional, Sequence

from loguru import logger

from ..costalgebra import CostExpr, bell, constant, max_of, scale, sum_costs
from ..datamodel import Algorithm, AlgorithmReport, HardwareProfile, QAOAInstance, QFlyTopology, StageReport
from ..errors import LayoutError
from ..subroutines import gridsynth_cycles, local_mct
from ..topology import analytic_broadcast_cost
from ..validation import ValidationService
from .stages import DEFAULT_T_POINTS, Number, make_stage, total_stage

# clause evaluation starts 2 T_Bell after the fan-out completes
CLAUSE_STARTUP_BELL = 2
# Bell consumptions to gather partial clause results from the nodes of a group
CLAUSE_GATHER_BELL = 7
# coefficients of the alternative in-text total
IN_TEXT_TOFFOLI_BOUND = 156
IN_TEXT_BELL_BOUND = 19


def _check_layout(inst: QAOAInstance, topo: QFlyTopology) -> None:
    result = ValidationService.validate_qaoa_layout(inst, topo)
    if not result.is_valid:
        raise LayoutError("; ".join(error.error for error in result.errors))


def clause_rounds(inst: QAOAInstance, topo: QFlyTopology) -> int:
    """Sequential clause rounds per group, rounded up."""
    return math.ceil(inst.n_clauses / topo.num_groups)


def clause_round_cost(inst: QAOAInstance, hw: HardwareProfile) -> CostExpr:
    """max(7·T_Bell, 5·T_Toff) + T_Grid: Bell gathering overlaps the local MCT."""
    domain = hw.t_bell_domain
    mct = local_mct(inst.vars_per_node + 1) * hw.t_toff
    return max_of(bell(CLAUSE_GATHER_BELL, domain), constant(mct, domain)) + constant(
        gridsynth_cycles(inst.precision_m, hw), domain
    )


def fanout_cost(topo: QFlyTopology, hw: HardwareProfile) -> CostExpr:
    return analytic_broadcast_cost(topo, hw.t_bell_domain) + bell(CLAUSE_STARTUP_BELL, hw.t_bell_domain)


def qaoa_fanout_stage(
    inst: QAOAInstance,
    topo: Optional[QFlyTopology] = None,
    hw: Optional[HardwareProfile] = None,
    t_points: Sequence[Number] = DEFAULT_T_POINTS,
) -> StageReport:
    """
    Intra-group fan-out, source-limited inter-group broadcast and worst-case rearrangement.

    Raises:
        LayoutError: if the variables do not fit a group's nodes.
    """
    topo = topo or QFlyTopology()
    hw = hw or HardwareProfile()
    _check_layout(inst, topo)
    cost = fanout_cost(topo, hw)
    slope = cost.terms[0].slope
    return make_stage(
        "fanout",
        "Intra/Inter-Group Fan-out",
        f"{slope}·T_Bell",
        cost,
        t_points,
        notes=f"includes {CLAUSE_STARTUP_BELL}·T_Bell clause-evaluation start-up",
    )


def qaoa_clause_stage(
    inst: QAOAInstance,
    hw: Optional[HardwareProfile] = None,
    topo: Optional[QFlyTopology] = None,
    t_points: Sequence[Number] = DEFAULT_T_POINTS,
) -> StageReport:
    """Every group evaluates its share of clauses; cross-node AND uncompute is free."""
    topo = topo or QFlyTopology()
    hw = hw or HardwareProfile()
    rounds = clause_rounds(inst, topo)
    mct = local_mct(inst.vars_per_node + 1)
    cost = scale(clause_round_cost(inst, hw), rounds)
    return make_stage(
        "clause_evaluation",
        "Clause Evaluation",
        f"{rounds}(max({CLAUSE_GATHER_BELL}·T_Bell, {mct}·T_Toff) + T_Grid)",
        cost,
        t_points,
    )


def qaoa_mixer_stage(
    inst: QAOAInstance, hw: Optional[HardwareProfile] = None, t_points: Sequence[Number] = DEFAULT_T_POINTS
) -> StageReport:
    """All mixer rotations are local and run in parallel."""
    hw = hw or HardwareProfile()
    cycles = gridsynth_cycles(inst.precision_m, hw)
    return make_stage("mixer", "Mixer Rotations", f"T_Grid = {cycles}", constant(cycles, hw.t_bell_domain), t_points)


def qaoa_iteration(
    inst: Optional[QAOAInstance] = None,
    topo: Optional[QFlyTopology] = None,
    hw: Optional[HardwareProfile] = None,
    t_points: Sequence[Number] = DEFAULT_T_POINTS,
) -> AlgorithmReport:
    inst = inst or QAOAInstance()
    topo = topo or QFlyTopology()
    hw = hw or HardwareProfile()
    stages = [
        qaoa_fanout_stage(inst, topo, hw, t_points),
        qaoa_clause_stage(inst, hw, topo, t_points),
        qaoa_mixer_stage(inst, hw, t_points),
    ]
    total = total_stage("total", "Total QAOA Iteration", stages, t_points, multiplier=inst.p_iterations)
    logger.debug(f"QAOA iteration over {inst.n_clauses} clauses: {total.cost.render()}")
    return AlgorithmReport(algorithm=Algorithm.QAOA, stages=stages, total=total)


def qaoa_in_text_total(
    inst: Optional[QAOAInstance] = None, topo: Optional[QFlyTopology] = None, hw: Optional[HardwareProfile] = None
) -> CostExpr:
    """
    Alternative single-expression QAOA total.

    Disagrees with the stage decomposition in the second clause term; kept for
    reference only and never used for reported values.
    """
    inst = inst or QAOAInstance()
    topo = topo or QFlyTopology()
    hw = hw or HardwareProfile()
    domain = hw.t_bell_domain
    rounds = clause_rounds(inst, topo)
    mct = local_mct(inst.vars_per_node + 1) * hw.t_toff
    return sum_costs(
        [
            fanout_cost(topo, hw),
            scale(max_of(bell(CLAUSE_GATHER_BELL, domain), constant(mct, domain)), rounds),
            scale(max_of(constant(IN_TEXT_TOFFOLI_BOUND * hw.t_toff, domain), bell(IN_TEXT_BELL_BOUND, domain)), rounds),
            constant(gridsynth_cycles(inst.precision_m, hw), domain),
        ],
        domain,
    )
