"""
Job graph of the group-parallel QAOA clause evaluation, used to check that Bell
pair preparation really hides behind the phasing rotation of the previous round.
"""

import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from loguru import logger

from ..algorithms import clause_round_cost, clause_rounds
from ..algorithms.qaoa import CLAUSE_GATHER_BELL, CLAUSE_STARTUP_BELL
from ..costalgebra import evaluate, round_cycles
from ..datamodel import HardwareProfile, Job, PipelineCheck, QAOAInstance, QFlyTopology, ResourcePool
from ..errors import ScheduleError
from ..subroutines import gridsynth_cycles, local_mct
from .scheduler import simulate

Number = Union[int, Fraction]

BELL_LINK = "bell_link"
T_FACTORY = "t_factory"

CLAUSE_POOLS: Tuple[ResourcePool, ...] = (
    ResourcePool(name=BELL_LINK, capacity=1),
    # one T state per node per cycle
    ResourcePool(name=T_FACTORY, capacity=1),
)


def _job_id(round_index: int, step: str) -> str:
    # zero padding keeps lexicographic order equal to round order
    return f"r{round_index:05d}.{step}"


def build_clause_pipeline(
    inst: QAOAInstance, hw: Optional[HardwareProfile], rounds: int, t_bell: Number
) -> List[Job]:
    """
    Per round: Bell preparation, local MCT, serialized gather of 7 Bell pairs, phasing.

    The next round prepares its Bell pairs as soon as this round's gather frees the
    link, so preparation overlaps the phasing rotation. Fractional T_Bell rounds up
    per consumption.
    """
    hw = hw or HardwareProfile()
    if rounds < 0:
        raise ScheduleError(f"rounds must be non-negative, got {rounds}")
    bell = math.ceil(Fraction(t_bell))
    prep = CLAUSE_STARTUP_BELL * bell
    gather = CLAUSE_GATHER_BELL * bell
    mct = local_mct(inst.vars_per_node + 1) * hw.t_toff
    phase = gridsynth_cycles(inst.precision_m, hw)

    jobs: List[Job] = []
    for i in range(1, rounds + 1):
        previous_phase = {_job_id(i - 1, "phase")} if i > 1 else set()
        prep_preds = {_job_id(i - 1, "gather")} if i > 1 else set()
        jobs.extend(
            [
                Job(
                    id=_job_id(i, "prep"),
                    duration=prep,
                    demands={BELL_LINK: 1},
                    predecessors=frozenset(prep_preds),
                    label="Bell pair preparation",
                ),
                Job(
                    id=_job_id(i, "mct"),
                    duration=mct,
                    demands={T_FACTORY: 1},
                    predecessors=frozenset({_job_id(i, "prep")} | previous_phase),
                    label="local multi-controlled Toffoli",
                ),
                Job(
                    id=_job_id(i, "gather"),
                    duration=gather,
                    demands={BELL_LINK: 1},
                    predecessors=frozenset({_job_id(i, "prep")} | previous_phase),
                    label="gather partial clause results",
                ),
                Job(
                    id=_job_id(i, "phase"),
                    duration=phase,
                    demands={T_FACTORY: 1},
                    predecessors=frozenset({_job_id(i, "mct"), _job_id(i, "gather")}),
                    label="phasing rotation",
                ),
            ]
        )
    return jobs


def pipeline_makespan(inst: QAOAInstance, hw: Optional[HardwareProfile], rounds: int, t_bell: Number) -> int:
    return simulate(build_clause_pipeline(inst, hw, rounds, t_bell), CLAUSE_POOLS).makespan


def validate_analytic(
    inst: Optional[QAOAInstance] = None,
    hw: Optional[HardwareProfile] = None,
    t_points: Sequence[Number] = (2, 5, 10),
    topo: Optional[QFlyTopology] = None,
) -> List[PipelineCheck]:
    """
    Simulate the clause stage and compare it with max(7·T_Bell, 5·T_Toff) + T_Grid per round.

    Raises:
        ScheduleError: if the simulated round is slower than the analytic bound.
    """
    inst = inst or QAOAInstance()
    hw = hw or HardwareProfile()
    topo = topo or QFlyTopology()
    rounds = clause_rounds(inst, topo)
    per_round_cost = clause_round_cost(inst, hw)

    checks = []
    for t in t_points:
        one = pipeline_makespan(inst, hw, 1, t)
        two = pipeline_makespan(inst, hw, 2, t)
        simulated_per_round = two - one
        analytic_per_round = round_cycles(evaluate(per_round_cost, t))
        if simulated_per_round > analytic_per_round:
            raise ScheduleError(
                f"Simulated round takes {simulated_per_round} cycles at T_Bell={t}, "
                f"analytic bound is {analytic_per_round}"
            )
        makespan = pipeline_makespan(inst, hw, rounds, t)
        analytic_stage = round_cycles(rounds * evaluate(per_round_cost, t))
        checks.append(
            PipelineCheck(
                t_bell=Fraction(t),
                rounds=rounds,
                simulated_per_round=simulated_per_round,
                analytic_per_round=analytic_per_round,
                simulated_makespan=makespan,
                analytic_stage=analytic_stage,
                startup=makespan - analytic_stage,
                slack=analytic_per_round - simulated_per_round,
            )
        )
        logger.info(f"Clause pipeline at T_Bell={t}: {simulated_per_round} cycles/round, start-up {makespan - analytic_stage}")
    return checks
