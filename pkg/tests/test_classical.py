from __future__ import annotations

import ast
from pathlib import Path

import pytest

import dnc.classical.oracle as oracle_module
from dnc.classical import (
    classical_blowup_chart,
    classical_normal_cone,
    classical_rees,
    compare_classical_blowup,
    compare_classical_deformation,
    power_slice_check,
)
from dnc.errors import EmptyCenter
from dnc.polycore import Ring, ideal_equal

from conftest import center

# reduced bases from sympy elimination of t (lex), frozen
SYMPY_REES = {
    "C2": ["X1*y - X2*x"],
    "C4": ["X1*y - X2*x"],
}
SYMPY_EXTENDED = {
    "C3": ["X2*tinv - x", "X1 - X2"],
    "C4": ["X1*tinv - x^2", "X2*tinv - x*y", "-X1*y + X2*x"],
}


def _ideal(strings, ring):
    return [ring.parse(s) for s in strings]


def test_c1_rees_is_zero_ideal():
    assert classical_rees(Ring(["u"]), ["u"]).ideal.basis == ()
    ext = classical_rees(Ring(["u"]), ["u"], extended=True)
    assert ext.ideal.strings() == ["tinv*X1 - u"]


@pytest.mark.parametrize("label", sorted(SYMPY_REES))
def test_rees_matches_frozen_elimination(label):
    c = center(label)
    r = classical_rees(c.ambient, c.gens)
    assert ideal_equal(list(r.ideal.basis), _ideal(SYMPY_REES[label], r.ring), ring=r.ring)


@pytest.mark.parametrize("label", sorted(SYMPY_EXTENDED))
def test_extended_rees_matches_frozen_elimination(label):
    c = center(label)
    r = classical_rees(c.ambient, c.gens, extended=True)
    assert ideal_equal(list(r.ideal.basis), _ideal(SYMPY_EXTENDED[label], r.ring), ring=r.ring)


def test_empty_center_rejected():
    with pytest.raises(EmptyCenter):
        classical_rees(Ring(["x"]), [])


@pytest.mark.parametrize("label", ["C1", "C2", "C3", "C4"])
def test_power_slices(label):
    c = center(label)
    assert all(power_slice_check(c.ambient, c.gens, 5).values())


def test_normal_cone_c2_is_polynomial_over_origin():
    cone = classical_normal_cone(Ring(["x", "y"]), ["x", "y"])
    assert set(cone.strings()) == {"x", "y"}


def test_normal_cone_c1():
    assert classical_normal_cone(Ring(["u"]), ["u"]).strings() == ["u"]


def test_classical_chart_c4():
    ring = Ring(["x", "y", "y1"])
    chart = classical_blowup_chart(Ring(["x", "y"]), ["x^2", "x*y"], 2, {1: "y1"})
    # sympy: saturating x^2 - w*x*y at x*y gives (x - w*y)
    assert ideal_equal(_ideal(chart.strings(), ring), [ring.parse("y1*y - x")], ring=ring)


@pytest.mark.parametrize("label, torsion", [("C1", []), ("C2", []), ("C3", ["X1 - X2"])])
def test_deformation_comparison(label, torsion):
    rep = compare_classical_deformation(center(label))
    assert rep.ok and rep.torsion == torsion
    assert rep.no_op is (not torsion)


def test_deformation_comparison_c4_strict_torsion():
    rep = compare_classical_deformation(center("C4"))
    assert rep.ok and not rep.no_op
    assert rep.torsion == ["y*X1 - x*X2"]


def test_deformation_comparison_unit_center():
    assert compare_classical_deformation(center("CU")).ok


@pytest.mark.parametrize("label", ["C1", "C2", "C3", "C4", "CU"])
def test_blowup_comparison(label):
    assert compare_classical_blowup(center(label)).ok


def test_blowup_comparison_no_op_for_regular_center():
    rep = compare_classical_blowup(center("C2"))
    assert all(rep.no_op.values())


def test_blowup_comparison_c4_chart_two_needs_saturation():
    rep = compare_classical_blowup(center("C4"))
    assert rep.charts[2] and not rep.no_op[2]


@pytest.mark.parametrize("cmp", [compare_classical_deformation, compare_classical_blowup])
def test_comparisons_reject_empty_center(cmp):
    with pytest.raises(EmptyCenter):
        cmp(center("C0"))


def test_oracle_imports_only_the_polynomial_kernel():
    tree = ast.parse(Path(oracle_module.__file__).read_text())
    imported = set()
    for node in ast.walk(tree):
        if isinstance(node, ast.ImportFrom):
            imported.add((node.level, node.module))
        elif isinstance(node, ast.Import):
            imported.update((0, a.name) for a in node.names)
    internal = {m for lvl, m in imported if lvl > 0}
    assert internal <= {"polycore", "errors"}
    assert not any(m and m.startswith("dnc") for lvl, m in imported if lvl == 0)
