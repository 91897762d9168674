from __future__ import annotations

import pytest

from dnc.blowup import (
    base_change_square,
    blowup_chart,
    blowup_charts,
    check_excessive,
    cocycle_check,
    exceptional_divisor,
    expected_chart_differential,
    make_square,
    transition,
    verify_deformation_as_blowup,
)
from dnc.dgalg import pi0
from dnc.errors import EmptyCenter, IndexOutOfRange
from dnc.homology import homology_table
from dnc.polycore import Ring
from dnc.rees import make_center

from conftest import center


def test_c2_chart_one():
    ch = blowup_chart(center("C2"), 1)
    assert ch.exceptional_equation == ch.exceptional_equation.ring.parse("x")
    assert ch.cdga.gen_names == ("y2", "e2")
    assert ch.cdga.d("e2") == ch.cdga.element("y2*x - y")
    assert pi0(ch.cdga).ideal.strings() == ["x*y2 - y"]
    t = homology_table(ch.cdga, (1, 1), 0, 6)
    assert t.vanishes_above(0)


@pytest.mark.parametrize("label", ["C1", "C2", "C3", "C4"])
def test_chart_count_and_equations(label):
    c = center(label)
    charts = blowup_charts(c)
    assert len(charts) == c.n
    for ch in charts:
        assert ch.exceptional_equation == c.gens[ch.index - 1]
        for i in range(1, c.n + 1):
            if i != ch.index:
                assert ch.cdga.d(f"e{i}") == expected_chart_differential(ch, i)


def test_c4_chart_two_is_not_classical():
    ch = blowup_chart(center("C4"), 2)
    assert ch.cdga.d("e1") == ch.cdga.element("y1*x*y - x^2")
    P = pi0(ch.cdga)
    assert P.contains(P.ring.parse("x*(y1*y - x)"))
    assert not P.contains(P.ring.parse("y1*y - x"))


def test_unit_center_blowup_is_ambient():
    charts = blowup_charts(center("CU"))
    assert len(charts) == 1 and charts[0].cdga.gen_names == ()
    assert pi0(exceptional_divisor(charts[0])).is_zero_ring()


def test_empty_center_blowup_is_empty():
    assert blowup_charts(center("C0")) == []
    with pytest.raises(IndexOutOfRange):
        blowup_chart(center("C0"), 1)


def test_exceptional_divisor_c2():
    E = exceptional_divisor(blowup_chart(center("C2"), 1))
    P = pi0(E)
    # over the origin: Q[y2], the affine line in P^1
    assert set(P.ideal.strings()) == {"x", "y"}
    assert P.ring.names == ("x", "y", "y2")


def test_exceptional_divisor_c1_is_the_center():
    E = exceptional_divisor(blowup_chart(center("C1"), 1))
    assert E.gen_names == ("eps",) and E.d("eps") == E.element("u")


def test_transition_c2():
    charts = blowup_charts(center("C2"))
    rep = transition(charts, 1, 2)
    assert rep.ok
    back = transition(charts, 2, 1)
    assert back.ok


def test_transition_c3_swaps_copies():
    charts = blowup_charts(center("C3"))
    assert transition(charts, 1, 2).ok


def test_transition_bad_index():
    charts = blowup_charts(center("C2"))
    with pytest.raises(IndexOutOfRange):
        transition(charts, 1, 3)
    with pytest.raises(IndexOutOfRange):
        transition(charts, 1, 1)


def test_cocycle_three_generators():
    charts = blowup_charts(make_center(["x", "y", "z"], ["x", "y", "z"]))
    assert cocycle_check(charts, 1, 2, 3)
    assert all(transition(charts, j, k).ok for j in (1, 2, 3) for k in (1, 2, 3) if j != k)


@pytest.mark.parametrize("label, nchart", [("C1", 2), ("C2", 3)])
def test_deformation_as_blowup(label, nchart):
    rep = verify_deformation_as_blowup(center(label))
    assert rep.ok and rep.t_chart_equal
    assert len(rep.charts) == nchart - 1


def test_deformation_as_blowup_empty():
    with pytest.raises(EmptyCenter):
        verify_deformation_as_blowup(center("C0"))


class TestExcessive:
    def test_base_change_square(self):
        src = make_center(["x", "y"], ["x", "y"])
        sq = base_change_square(src, {"x": "x", "y": "0"}, Ring(["x"]))
        rep = check_excessive(sq)
        assert rep.classically_cartesian and rep.conormal_surjective and rep.excessive

    def test_self_intersection_squares(self):
        sq = make_square(make_center(["x", "y"], ["x", "y"]), make_center(["x"], ["x"]),
                         {"x": "x", "y": "0"}, [["1"], ["0"]])
        assert check_excessive(sq).excessive
        sq = make_square(make_center(["x"], ["x"]), make_center([], []), {"x": "0"}, [[]])
        assert check_excessive(sq).excessive

    def test_square_of_x_against_x_squared(self):
        sq = make_square(make_center(["x"], ["x^2"]), make_center(["x"], ["x"]), {"x": "x"}, [["x"]])
        rep = check_excessive(sq)
        assert not rep.classically_cartesian and not rep.excessive

    def test_pullback_along_ramified_map(self):
        # (x) pulled back along x -> x^2 is (x^2), written through f' = x^2 with c = 1
        sq = make_square(make_center(["x"], ["x"]), make_center(["x"], ["x^2"]), {"x": "x^2"}, [["1"]])
        rep = check_excessive(sq)
        assert rep.classically_cartesian and rep.conormal_surjective

    def test_smaller_center_is_not_cartesian(self):
        sq = make_square(make_center(["x", "y"], ["x"]), make_center(["x", "y"], ["x", "y"]),
                         {"x": "x", "y": "y"}, [["1", "0"]])
        rep = check_excessive(sq)
        assert not rep.classically_cartesian and not rep.conormal_surjective
