from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from ..costalgebra import CostExpr, evaluate, round_cycles, scale, slope_at, sum_costs
from ..datamodel import EvaluatedCell, StageReport

Number = Union[int, Fraction]

DEFAULT_T_POINTS: Tuple[Fraction, ...] = (Fraction(2), Fraction(5), Fraction(10))


def evaluate_cells(cost: CostExpr, t_points: Iterable[Number]) -> List[EvaluatedCell]:
    cells = []
    for t in t_points:
        exact = evaluate(cost, t)
        cells.append(EvaluatedCell(t_bell=Fraction(t), exact=exact, cycles=round_cycles(exact)))
    return cells


def make_stage(
    key: str, name: str, formula: str, cost: CostExpr, t_points: Sequence[Number] = DEFAULT_T_POINTS, notes: str = ""
) -> StageReport:
    lo, hi = cost.domain
    return StageReport(
        key=key,
        name=name,
        formula=formula,
        cost=cost,
        evaluated=evaluate_cells(cost, t_points),
        bell_slope=slope_at(cost, (lo + hi) / 2),
        notes=notes,
    )


def total_stage(
    key: str,
    name: str,
    stages: Sequence[StageReport],
    t_points: Sequence[Number] = DEFAULT_T_POINTS,
    multiplier: int = 1,
) -> StageReport:
    """Exact sum of stage costs; rounding happens only per evaluated cell."""
    cost = scale(sum_costs(stage.cost for stage in stages), multiplier)
    formula = " + ".join(stage.key for stage in stages)
    if multiplier != 1:
        formula = f"{multiplier}·({formula})"
    return make_stage(key, name, formula, cost, t_points)
