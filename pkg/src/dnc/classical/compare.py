"""Derived constructions against the classical oracle, at the level of pi0."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..blowup import blowup_charts
from ..errors import EmptyCenter
from ..polycore import Ring, buchberger, ideal_equal, saturate, substitute, transfer
from ..rees import CenterPresentation, rees_extended
from .oracle import classical_blowup_chart, classical_normal_cone, classical_rees


@dataclass
class DeformationComparison:
    surjective: bool
    closure_equal: bool
    no_op: bool
    torsion: list[str]
    derived_ideal: list[str]
    saturated: list[str]
    classical: list[str]
    normal_cone_equal: bool

    @property
    def ok(self) -> bool:
        return self.surjective and self.closure_equal and self.normal_cone_equal

    def to_dict(self) -> dict:
        return {
            "surjective": self.surjective,
            "closure_equal": self.closure_equal,
            "saturation_no_op": self.no_op,
            "torsion": self.torsion,
            "derived_ideal": self.derived_ideal,
            "saturated_ideal": self.saturated,
            "classical_ideal": self.classical,
            "normal_cone_equal": self.normal_cone_equal,
            "verdict": self.ok,
        }


def compare_classical_deformation(center: CenterPresentation) -> DeformationComparison:
    if center.n == 0:
        raise EmptyCenter("comparison needs a nonempty center")
    P = rees_extended(center).pi0()
    ring = P.ring
    J = buchberger(list(P.relations), ring=ring)
    oracle = classical_rees(center.ambient, center.gens, center.labels, extended=True, param=center.param)
    K = [transfer(p, ring) for p in oracle.ideal.basis]
    Kgb = buchberger(K, ring=ring)
    surjective = Kgb.contains_all(J.basis)
    sat = saturate(list(J.basis), ring.gen(center.param), ring)
    closure = ideal_equal(sat, K, ring=ring)
    torsion = [str(p) for p in sat if not J.contains(p)]

    # the closure's special fiber is the classical normal cone
    cone_ring = Ring(tuple(n for n in ring.names if n != center.param))
    fiber = [transfer(substitute(p, {center.param: ring.zero()}, ring), cone_ring) for p in sat]
    cone = classical_normal_cone(center.ambient, center.gens, center.labels)
    cone_equal = ideal_equal(fiber, [transfer(p, cone_ring) for p in cone.basis], ring=cone_ring)
    return DeformationComparison(surjective, closure, not torsion, torsion, J.strings(),
                                 buchberger(sat, ring=ring).strings(), Kgb.strings(), cone_equal)


@dataclass
class BlowupComparison:
    charts: dict[int, bool] = field(default_factory=dict)
    saturated: dict[int, list[str]] = field(default_factory=dict)
    classical: dict[int, list[str]] = field(default_factory=dict)
    no_op: dict[int, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.charts.values())

    def to_dict(self) -> dict:
        return {
            "charts": {
                str(j): {"equal": self.charts[j], "saturation_no_op": self.no_op[j],
                         "saturated": self.saturated[j], "classical": self.classical[j]}
                for j in sorted(self.charts)
            },
            "verdict": self.ok,
        }


def compare_classical_blowup(center: CenterPresentation) -> BlowupComparison:
    if center.n == 0:
        raise EmptyCenter("comparison needs a nonempty center")
    out = BlowupComparison()
    for chart in blowup_charts(center):
        P = chart.pi0()
        ring = P.ring
        fj = transfer(chart.exceptional_equation, ring)
        if fj.is_zero():
            sat = [ring.one()]
        else:
            sat = saturate(list(P.relations), fj, ring)
        names = dict(chart.chart_vars)
        oracle = classical_blowup_chart(center.ambient, center.gens, chart.index, names)
        classical = [transfer(p, ring) for p in oracle.basis]
        j = chart.index
        out.charts[j] = ideal_equal(sat, classical, ring=ring)
        out.no_op[j] = ideal_equal(sat, list(P.relations), ring=ring)
        out.saturated[j] = buchberger(sat, ring=ring).strings()
        out.classical[j] = oracle.strings()
    return out
