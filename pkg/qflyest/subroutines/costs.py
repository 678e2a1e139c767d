"""
Cost models of the distributed primitives.

Every constructor returns a SubroutineCost whose CostExpr lives on the profile's
T_Bell domain. A Toffoli executed across nodes costs T_Toff + r·T_Bell, where the
routing ratio r is the share of Toffolis that consume a Bell pair.
"""

import math
from fractions import Fraction
from typing import Optional, Union

from loguru import logger

from ..costalgebra import CostExpr, affine, bell, constant, evaluate, round_cycles, scale, slope_at, zero
from ..datamodel import FanOutKind, HardwareProfile, QFlyTopology, SubroutineCost, check_routing_ratio
from ..errors import CostDomainError
from ..topology.qfly import INTRA_GROUP_FANOUT_BELL
from ..utils import format_rational

Number = Union[int, Fraction]

CROSSOVER_GUARD = 4096
# 7 variables per node plus the clause ancilla
QAOA_MCT_CONTROLS = 8
QAOA_MCT_TOFFOLIS = 5

_DEFAULT_PROFILE = HardwareProfile()


def _profile(hw: Optional[HardwareProfile]) -> HardwareProfile:
    return hw if hw is not None else _DEFAULT_PROFILE


def _require(value: int, minimum: int, name: str) -> None:
    if value < minimum:
        raise CostDomainError(f"{name} must be at least {minimum}, got {value}")


def ceil_log2(n: int) -> int:
    """Ceiling of log2 for positive integers, exact (no float rounding)."""
    _require(n, 1, "n")
    return (n - 1).bit_length()


def _priced(name: str, formula: str, cost: CostExpr, toffoli_count: Optional[int] = None, notes: str = "") -> SubroutineCost:
    lo, hi = cost.domain
    return SubroutineCost(
        name=name,
        formula=formula,
        cost=cost,
        toffoli_count=toffoli_count,
        bell_slope=slope_at(cost, (lo + hi) / 2),
        notes=notes,
    )


def toffoli_step(r: Number, hw: Optional[HardwareProfile] = None) -> CostExpr:
    """
    One possibly remote Toffoli: T_Toff + r·T_Bell.

    Raises:
        InvalidRoutingRatio: if r lies outside [0, 1].
    """
    hw = _profile(hw)
    return affine(hw.t_toff, check_routing_ratio(r), hw.t_bell_domain)


def gidney_adder(n: int, r: Number, hw: Optional[HardwareProfile] = None) -> SubroutineCost:
    """Ripple-carry adder with temporary logical-AND: one Toffoli per carry."""
    _require(n, 1, "n")
    cost = scale(toffoli_step(r, hw), n - 1)
    return _priced(
        "Gidney Adder",
        f"({n} - 1)(T_Toff + {format_rational(Fraction(r))}·T_Bell)",
        cost,
        toffoli_count=n - 1,
    )


def qcla_adder(n: int, r: Number, hw: Optional[HardwareProfile] = None) -> SubroutineCost:
    """Carry-lookahead adder: ceil(log2 n) + 4 Toffoli layers."""
    _require(n, 1, "n")
    layers = ceil_log2(n) + 4
    cost = scale(toffoli_step(r, hw), layers)
    return _priced(
        "QCLA",
        f"(⌈log2 {n}⌉ + 4)(T_Toff + {format_rational(Fraction(r))}·T_Bell)",
        cost,
        toffoli_count=layers,
    )


def gridsynth_cycles(precision_m: int, hw: Optional[HardwareProfile] = None) -> int:
    hw = _profile(hw)
    _require(precision_m, 1, "precision_m")
    return round_cycles(hw.gridsynth_a + hw.gridsynth_b * precision_m)


def gridsynth_rotation(precision_m: int, hw: Optional[HardwareProfile] = None) -> SubroutineCost:
    """Local single-qubit rotation synthesis; independent of T_Bell."""
    hw = _profile(hw)
    cycles = gridsynth_cycles(precision_m, hw)
    return _priced(
        "Gridsynth Rotation",
        f"round({float(hw.gridsynth_a):g} + {float(hw.gridsynth_b):g}·{precision_m})",
        constant(cycles, hw.t_bell_domain),
    )


def phase_gradient_rotation(precision_m: int, r: Number, hw: Optional[HardwareProfile] = None) -> SubroutineCost:
    """
    Rotation by adding the angle register into a phase gradient state.

    The controlled write of the angle and its measurement-based uncompute are free,
    so the rotation costs exactly one QCLA of the same width.
    """
    adder = qcla_adder(precision_m, r, hw)
    return _priced(
        "Phase Gradient Rotation",
        adder.formula,
        adder.cost,
        toffoli_count=adder.toffoli_count,
        notes="angle write and uncompute charged zero",
    )


def rotation_crossover(r: Number, t_bell: Number, hw: Optional[HardwareProfile] = None) -> int:
    """
    Smallest precision at which phase-gradient phasing beats gridsynth.

    Compares the exact gridsynth value a + b·m, not the rounded cycle count.

    Raises:
        CostDomainError: if t_bell is outside the domain or no crossover exists up to the guard.
    """
    hw = _profile(hw)
    step = toffoli_step(r, hw)
    per_layer = evaluate(step, t_bell)
    for m in range(1, CROSSOVER_GUARD + 1):
        if (ceil_log2(m) + 4) * per_layer < hw.gridsynth_a + hw.gridsynth_b * m:
            logger.debug(f"Rotation crossover at m={m} for r={r}, T_Bell={t_bell}")
            return m
    raise CostDomainError(f"no rotation crossover below m={CROSSOVER_GUARD} for r={r}, T_Bell={t_bell}")


def fastest_rotation(precision_m: int, r: Number, t_bell: Number, hw: Optional[HardwareProfile] = None) -> SubroutineCost:
    """Cheaper of gridsynth and phase-gradient phasing at t_bell; gridsynth on ties."""
    grid = gridsynth_rotation(precision_m, hw)
    gradient = phase_gradient_rotation(precision_m, r, hw)
    return gradient if evaluate(gradient.cost, t_bell) < evaluate(grid.cost, t_bell) else grid


def linear_phasing(
    precision_m: int, r: Number, hw: Optional[HardwareProfile] = None, custom_gradient_prepared: bool = True
) -> SubroutineCost:
    """
    Phase by a classical weight embedded in a custom gradient state.

    An unprepared custom gradient is charged one gridsynth synthesis for its preparation.
    """
    gradient = phase_gradient_rotation(precision_m, r, hw)
    if custom_gradient_prepared:
        return _priced("Linear Phasing", gradient.formula, gradient.cost, toffoli_count=gradient.toffoli_count)
    prep = gridsynth_rotation(precision_m, hw)
    return _priced(
        "Linear Phasing",
        f"{prep.formula} + {gradient.formula}",
        prep.cost + gradient.cost,
        toffoli_count=gradient.toffoli_count,
        notes="includes one-time custom gradient preparation",
    )


def controlled_rotation(rotation: SubroutineCost) -> SubroutineCost:
    """CR_Y as two sequential half-angle rotations."""
    return _priced(f"Controlled {rotation.name}", f"2·({rotation.formula})", scale(rotation.cost, 2))


def ccr_tacu(
    r: Number, rotation: SubroutineCost, hw: Optional[HardwareProfile] = None, num_controls: int = 2
) -> SubroutineCost:
    """
    Multi-controlled rotation through a temporary-AND ancilla.

    A Toffoli staircase computes the AND of the controls, the ancilla controls the
    rotation, and X-basis measurement uncomputes the ancilla for free.
    """
    _require(num_controls, 2, "num_controls")
    toffolis = num_controls - 1
    cost = scale(toffoli_step(r, hw), toffolis) + rotation.cost
    return _priced(
        "CCR TACU",
        f"{toffolis}(T_Toff + {format_rational(Fraction(r))}·T_Bell) + {rotation.formula}",
        cost,
        toffoli_count=toffolis,
    )


def local_mct(num_controls: int) -> int:
    """Toffoli count of an intra-node multi-controlled Toffoli."""
    _require(num_controls, 2, "num_controls")
    if num_controls == QAOA_MCT_CONTROLS:
        return QAOA_MCT_TOFFOLIS
    return num_controls - 1


def fan_out(
    kind: Union[FanOutKind, str],
    num_targets: int,
    topo: Optional[QFlyTopology] = None,
    hw: Optional[HardwareProfile] = None,
) -> SubroutineCost:
    """
    Copy a value to num_targets remote holders.

    ``intra-group`` is a switched GHZ fan-out in a constant 2·T_Bell. ``inter-node``
    reaches |offsets| groups per round. Either way one Bell pair is consumed per target.

    Raises:
        ValueError: for an unknown fan-out kind.
    """
    kind = FanOutKind(kind)
    hw = _profile(hw)
    _require(num_targets, 0, "num_targets")
    domain = hw.t_bell_domain
    if num_targets == 0:
        return _priced("Fan-out", "0", zero(domain), notes="Bell pairs consumed: 0")
    if kind == FanOutKind.INTRA_GROUP:
        cost, formula = bell(INTRA_GROUP_FANOUT_BELL, domain), "2·T_Bell"
    else:
        fan = len(topo.offsets) if topo is not None else len(QFlyTopology().offsets)
        rounds = math.ceil(num_targets / fan)
        cost, formula = bell(rounds, domain), f"⌈{num_targets}/{fan}⌉·T_Bell"
    return _priced("Fan-out", formula, cost, notes=f"Bell pairs consumed: {num_targets}")


def dicke_depth(weight_k: int) -> int:
    """Sequential CCR_Y depth ½k(k+1)⌈log2 k⌉, with ⌈log2 1⌉ counted as 1."""
    _require(weight_k, 1, "weight_k")
    return weight_k * (weight_k + 1) * max(1, ceil_log2(weight_k)) // 2


def dicke_unitary(
    weight_k: int,
    precision_m: int,
    r: Number,
    hw: Optional[HardwareProfile] = None,
    double_rotation: bool = False,
) -> SubroutineCost:
    """
    Dicke state preparation by weight distribution blocks.

    Each ladder step is one controlled rotation plus two Toffolis; ``double_rotation``
    charges the two half-angle syntheses of a CR_Y instead of one.
    """
    depth = dicke_depth(weight_k)
    grid = gridsynth_cycles(precision_m, hw) * (2 if double_rotation else 1)
    step = constant(grid, _profile(hw).t_bell_domain) + scale(toffoli_step(r, hw), 2)
    return _priced(
        "Dicke State Unitary",
        f"{depth}({format_rational(step.terms[-1].intercept)} + {format_rational(step.terms[-1].slope)}·T_Bell)",
        scale(step, depth),
        toffoli_count=2 * depth,
        notes="two half-angle rotations per step" if double_rotation else "",
    )
