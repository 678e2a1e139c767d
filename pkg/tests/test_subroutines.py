import random
from fractions import Fraction

import pytest
from pydantic import ValidationError

from qflyest.costalgebra import round_cycles
from qflyest.datamodel import FanOutKind, HardwareProfile, QFlyTopology, RoutingProfile
from qflyest.errors import CostDomainError, InvalidRoutingRatio
from qflyest.subroutines import (
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

ROUTING_DEFAULT = Fraction(1, 3)


def cycles(cost, t):
    return round_cycles(cost.cost(t))


def gradient_beats_gridsynth(m, r, t, hw=HardwareProfile()):
    per_layer = hw.t_toff + r * t
    return (ceil_log2(m) + 4) * per_layer < hw.gridsynth_a + hw.gridsynth_b * m


class TestAdders:
    def test_ceil_log2(self):
        assert [ceil_log2(n) for n in (1, 2, 3, 64, 65)] == [0, 1, 2, 6, 7]
        with pytest.raises(CostDomainError):
            ceil_log2(0)

    def test_gidney_reference_values(self):
        adder = gidney_adder(64, ROUTING_DEFAULT)
        assert [cycles(adder, t) for t in (2, 5, 10)] == [294, 357, 462]
        assert adder.toffoli_count == 63
        assert adder.bell_slope == 21
        assert adder.formula == "(64 - 1)(T_Toff + 1/3·T_Bell)"

    def test_one_bit_gidney_is_free(self):
        assert gidney_adder(1, ROUTING_DEFAULT).cost(5) == 0

    def test_qcla_reference_values(self):
        adder = qcla_adder(64, 1)
        assert [cycles(adder, t) for t in (2, 5, 10)] == [60, 90, 140]
        assert adder.toffoli_count == 10

    def test_local_adder(self):
        assert qcla_adder(64, 0).cost(10) == 40

    def test_invalid_width(self):
        with pytest.raises(CostDomainError):
            gidney_adder(0, 1)

    def test_qcla_never_slower_than_gidney(self):
        rng = random.Random(64)
        widths = list(range(64, 513)) + [rng.randint(513, 1 << 20) for _ in range(200)]
        for n in widths:
            qcla, gidney = qcla_adder(n, 1), gidney_adder(n, ROUTING_DEFAULT)
            for t in (2, Fraction(7, 2), 5, Fraction(33, 4), 10):
                assert qcla.cost(t) <= gidney.cost(t), (n, t)


class TestRotations:
    def test_gridsynth(self):
        assert gridsynth_cycles(64) == 201
        rotation = gridsynth_rotation(64)
        assert rotation.cost(2) == rotation.cost(10) == 201
        assert rotation.bell_slope == 0
        assert rotation.formula == "round(9.19 + 3·64)"

    def test_phase_gradient_is_one_qcla(self):
        assert phase_gradient_rotation(64, 1).cost == qcla_adder(64, 1).cost

    def test_crossover(self):
        assert rotation_crossover(1, 10) == 44
        assert rotation_crossover(1, 2) == 13

    @pytest.mark.parametrize("r", [0, ROUTING_DEFAULT, 1])
    @pytest.mark.parametrize("t", [2, 5, 10])
    def test_crossover_is_first_winning_precision(self, r, t):
        m = rotation_crossover(r, t)
        assert gradient_beats_gridsynth(m, r, t)
        assert not any(gradient_beats_gridsynth(smaller, r, t) for smaller in range(1, m))

    def test_crossover_without_remote_toffolis(self):
        # 28 cycles of local QCLA against 27.19 and then 30.19 of gridsynth
        assert rotation_crossover(0, 2) == rotation_crossover(0, 10) == 7

    def test_crossover_brackets_random_points(self):
        rng = random.Random(2026)
        for _ in range(300):
            r = Fraction(rng.randint(0, 12), 12)
            t = Fraction(rng.randint(20, 100), 10)
            m = rotation_crossover(r, t)
            assert gradient_beats_gridsynth(m, r, t), (r, t)
            assert m == 1 or not gradient_beats_gridsynth(m - 1, r, t), (r, t)

    def test_gradient_saving_at_high_precision(self):
        saving = gridsynth_rotation(64).cost(10) - phase_gradient_rotation(64, 1).cost(10)
        assert saving == 61

    def test_crossover_compares_exact_gridsynth(self):
        # at m = 43 the gradient costs 140 against an exact 138.19
        assert 10 * (4 + 10) > Fraction(919, 100) + 3 * 43
        assert rotation_crossover(1, 10) != 43

    def test_crossover_out_of_domain(self):
        with pytest.raises(CostDomainError):
            rotation_crossover(1, 11)

    def test_no_crossover_on_slow_toffolis(self):
        with pytest.raises(CostDomainError):
            rotation_crossover(1, 10, HardwareProfile(t_toff=10**6))

    def test_fastest_rotation(self):
        assert fastest_rotation(64, 1, 10).name == "Phase Gradient Rotation"
        assert fastest_rotation(8, 1, 10).name == "Gridsynth Rotation"

    def test_linear_phasing(self):
        assert linear_phasing(64, 1).cost(2) == 60
        unprepared = linear_phasing(64, 1, custom_gradient_prepared=False)
        assert unprepared.cost(2) == 261
        assert "preparation" in unprepared.notes

    def test_controlled_rotation(self):
        assert controlled_rotation(gridsynth_rotation(64)).cost(5) == 402

    def test_ccr_tacu(self):
        grid = gridsynth_rotation(64)
        assert ccr_tacu(ROUTING_DEFAULT, grid).cost(6) == 207
        assert ccr_tacu(ROUTING_DEFAULT, grid, num_controls=3).cost(6) == 213
        with pytest.raises(CostDomainError):
            ccr_tacu(ROUTING_DEFAULT, grid, num_controls=1)


class TestFanOutAndMct:
    def test_local_mct(self):
        assert local_mct(8) == 5
        assert local_mct(3) == 2
        with pytest.raises(CostDomainError):
            local_mct(1)

    def test_intra_group(self):
        fan = fan_out(FanOutKind.INTRA_GROUP, 11)
        assert fan.cost(5) == 10
        assert fan.notes == "Bell pairs consumed: 11"

    def test_inter_node(self):
        assert fan_out(FanOutKind.INTER_NODE, 63, QFlyTopology()).cost(2) == 22
        assert fan_out("inter-node", 6).cost(2) == 2

    def test_kind_from_text(self):
        assert fan_out("inter-node", 6).cost == fan_out(FanOutKind.INTER_NODE, 6).cost

    def test_no_targets(self):
        assert fan_out("inter-node", 0).cost(10) == 0

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            fan_out("broadcast", 3)


class TestDicke:
    def test_depth(self):
        assert dicke_depth(1) == 1
        assert dicke_depth(2) == 3
        assert dicke_depth(25) == 1625

    def test_reference_values(self):
        dicke = dicke_unitary(25, 64, ROUTING_DEFAULT)
        assert [cycles(dicke, t) for t in (2, 5, 10)] == [341_792, 345_042, 350_458]
        assert dicke.formula == "1625(209 + 2/3·T_Bell)"
        assert dicke.toffoli_count == 3250

    def test_double_rotation(self):
        dicke = dicke_unitary(25, 64, ROUTING_DEFAULT, double_rotation=True)
        assert dicke.cost(3) == 1625 * 412
        assert dicke.notes


class TestRoutingRatio:
    """Routing ratios are Bell pairs per Toffoli and must lie in [0, 1]"""

    @pytest.mark.parametrize("r", [Fraction(-1, 3), -1, Fraction(3, 2), 5])
    def test_out_of_range_rejected(self, r):
        grid = gridsynth_rotation(64)
        builders = [
            lambda: toffoli_step(r),
            lambda: gidney_adder(64, r),
            lambda: qcla_adder(64, r),
            lambda: phase_gradient_rotation(64, r),
            lambda: linear_phasing(64, r),
            lambda: ccr_tacu(r, grid),
            lambda: dicke_unitary(25, 64, r),
            lambda: rotation_crossover(r, 10),
            lambda: fastest_rotation(64, r, 10),
        ]
        for build in builders:
            with pytest.raises(InvalidRoutingRatio):
                build()

    def test_bounds_accepted(self):
        assert gidney_adder(64, 0).cost(10) == 63 * 4
        assert qcla_adder(64, 1).cost(10) == 140
        assert toffoli_step("1/3")(6) == 6

    def test_is_a_cost_domain_error(self):
        with pytest.raises(CostDomainError):
            gidney_adder(64, Fraction(5))

    def test_profile_uses_the_same_rule(self):
        with pytest.raises(ValidationError):
            RoutingProfile(default=2)
        assert RoutingProfile(qcla="1/2").qcla == Fraction(1, 2)


COST_BUILDERS = {
    "gidney_adder": lambda p: gidney_adder(p["n"], Fraction(p["r"], 12)),
    "qcla_adder": lambda p: qcla_adder(p["n"], Fraction(p["r"], 12)),
    "gridsynth_rotation": lambda p: gridsynth_rotation(p["m"]),
    "phase_gradient_rotation": lambda p: phase_gradient_rotation(p["m"], Fraction(p["r"], 12)),
    "ccr_tacu": lambda p: ccr_tacu(Fraction(p["r"], 12), gridsynth_rotation(p["m"])),
    "dicke_unitary": lambda p: dicke_unitary(p["k"], p["m"], Fraction(p["r"], 12)),
}


class TestMonotonicity:
    """Costs never fall as T_Bell, width, precision, weight or routing ratio grow"""

    @pytest.mark.parametrize("name", sorted(COST_BUILDERS))
    def test_non_decreasing(self, name):
        build = COST_BUILDERS[name]
        rng = random.Random(f"monotone-{name}")
        for _ in range(150):
            # r is kept in twelfths so it stays within [0, 1]
            params = {
                "n": rng.randint(1, 256),
                "m": rng.randint(1, 128),
                "k": rng.randint(1, 30),
                "r": rng.randint(0, 12),
            }
            tenths = rng.randint(20, 100)
            t, later = Fraction(tenths, 10), Fraction(rng.randint(tenths, 100), 10)
            base = build(params)
            assert base.cost(t) <= base.cost(later), (params, t, later)
            for axis in ("n", "m", "k", "r"):
                bumped = dict(params)
                bumped[axis] = rng.randint(params[axis], 12) if axis == "r" else params[axis] + rng.randint(1, 16)
                assert base.cost(t) <= build(bumped).cost(t), (params, axis, bumped)
