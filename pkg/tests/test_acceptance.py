"""Acceptance criteria on the center suite at cutoff 6.

Each criterion prints one line ``ACCEPTANCE <k> PASS|FAIL <title>: <detail>``.
Run directly (``python3 tests/test_acceptance.py``) for just those lines.
"""

from __future__ import annotations

import contextlib
import io
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from conftest import SUITE, center, problem_text  # noqa: E402

from dnc.blowup import (  # noqa: E402
    base_change_square,
    blowup_charts,
    check_excessive,
    exceptional_divisor,
    make_square,
    transition,
    verify_deformation_as_blowup,
)
from dnc.cache import DiskCache, using_cache  # noqa: E402
from dnc.classical import compare_classical_blowup, compare_classical_deformation  # noqa: E402
from dnc.cli import COMMANDS, render, run_command  # noqa: E402
from dnc.dgalg import derived_tensor, pi0  # noqa: E402
from dnc.dsl import parse_problem  # noqa: E402
from dnc.errors import DncError  # noqa: E402
from dnc.homology import homology_table  # noqa: E402
from dnc.infnbhd import consistent_index, pi0_ideal_check, recovers_center, verify_inf_triangles  # noqa: E402
from dnc.polycore import Ring, ideal_equal  # noqa: E402
from dnc.rees import compare_special_fiber, generic_fiber_check, make_center, rees_extended, rees_structure  # noqa: E402

D = 6
ALL = sorted(SUITE)
C1_C4 = ["C1", "C2", "C3", "C4"]
RESULTS: dict[int, tuple[bool, str, str]] = {}


def _fails(pairs) -> list[str]:
    return [label for label, ok in pairs if not ok]


def rees_structure_criterion():
    bad = _fails((c, rees_structure(rees_extended(center(c))).ok) for c in ALL)
    return not bad, f"free in weights <= 0, generated in weight 1, weight-1 image = (f) on {len(ALL)} centers" + (
        f"; failing {bad}" if bad else "")


def generic_fiber_criterion():
    bad = _fails((c, generic_fiber_check(rees_extended(center(c)))) for c in ALL)
    return not bad, "reduced basis {X_i - f_i t, t tinv - 1} after inverting tinv" + (f"; failing {bad}" if bad else "")


def special_fiber_criterion():
    bands, bad = {}, []
    for c in C1_C4:
        rep = compare_special_fiber(rees_extended(center(c)), D)
        bands[c] = rep.band
        if not (rep.presentation_equal and rep.tables_agree):
            bad.append(c)
    return not bad, f"presentation equal (cells rescaled by -1) and tables agree, bands {bands}" + (
        f"; failing {bad}" if bad else "")


def classical_deformation_criterion():
    reps = {c: compare_classical_deformation(center(c)) for c in C1_C4}
    ok = all(r.ok for r in reps.values())
    ok &= reps["C1"].no_op and reps["C2"].no_op
    ok &= bool(reps["C3"].torsion) and bool(reps["C4"].torsion)
    return ok, f"closure equal on C1-C4; torsion C3 {reps['C3'].torsion}, C4 {reps['C4'].torsion}"


def blowup_charts_criterion():
    notes, ok = [], True
    charts = blowup_charts(center("C2"))
    for ch in charts:
        P = pi0(ch.cdga)
        (j, v), = ch.chart_vars.items()
        other = "y" if ch.index == 1 else "x"
        mine = "x" if ch.index == 1 else "y"
        graph = ideal_equal(list(P.ideal.basis), [P.ring.parse(f"{other} - {mine}*{v}")], ring=P.ring)
        vanish = homology_table(ch.cdga, (1, ch.cdga.max_hdeg()), 0, D).vanishes_above(0)
        E = pi0(exceptional_divisor(ch))
        line = ideal_equal(list(E.ideal.basis), [E.ring.parse("x"), E.ring.parse("y")], ring=E.ring)
        ok &= graph and vanish and line
        notes.append(f"chart {ch.index} = Q[{mine},{v}]")
    ok &= transition(charts, 1, 2).ok
    unit = blowup_charts(center("CU"))
    ok &= len(unit) == 1 and unit[0].cdga.gen_names == () and pi0(unit[0].cdga).ideal.basis == ()
    ok &= blowup_charts(center("C0")) == []
    return ok, ", ".join(notes) + "; exceptional fibers are affine lines glued by v -> 1/v; CU gives Y; C0 empty"


def classical_blowup_criterion():
    bad = _fails((c, compare_classical_blowup(center(c)).ok) for c in C1_C4)
    return not bad, "chartwise saturation at f_j equals the elimination chart on C1-C4" + (
        f"; failing {bad}" if bad else "")


def deformation_blowup_criterion():
    reps = {c: verify_deformation_as_blowup(center(c)) for c in ("C1", "C2")}
    return all(r.ok for r in reps.values()), "tinv-chart equals pi0 of the extended Rees algebra; other charts match after inverting X_j"


def inf_criterion():
    x0 = all(r["pi0"] and r["homology"] for r in (recovers_center(rees_extended(center(c)), D) for c in ALL))
    tri = all(verify_inf_triangles(center(c), n, D).ok for c in ("C1", "C2", "C3") for n in (1, 2, 3))
    reports = [pi0_ideal_check(center(c), n) for c in ALL for n in (1, 2, 3)]
    idx = consistent_index(reports)
    ok = x0 and tri and idx is not None
    which = f"I^(n+{idx})" if idx else "none"
    return ok, f"X(0) = X {x0}; triangles n<=3 on C1-C3 {tri}; kernel of pi0 O_Y -> pi0 O_X(n) is {which} on the whole suite"


def multiplicativity_criterion():
    Rx = rees_extended(make_center(["x", "y"], ["x"], labels=["X1"], cells=["e1"]))
    Ry = rees_extended(make_center(["x", "y"], ["y"], labels=["X2"], cells=["e2"]))
    T = derived_tensor(Rx.cdga, Ry.cdga, over=["tinv"])
    R = rees_extended(center("C2")).cdga
    ok = T.same_presentation(R) and pi0(T).same_as(pi0(R))
    return ok, "R((x)) (x) R((y)) over Q[x,y][tinv] equals R((x,y)), presentation and pi0"


def excessive_criterion():
    plane = make_center(["x", "y"], ["x", "y"])
    checks = {
        "base change (x,y) along y -> 0": (check_excessive(base_change_square(plane, {"x": "x", "y": "0"}, Ring(["x"]))), True),
        "origin in axis in plane": (check_excessive(make_square(plane, make_center(["x"], ["x"]),
                                                                {"x": "x", "y": "0"}, [["1"], ["0"]])), True),
        "origin in line": (check_excessive(make_square(make_center(["x"], ["x"]), make_center([], []),
                                                       {"x": "0"}, [[]])), True),
        "(x^2) against (x)": (check_excessive(make_square(make_center(["x"], ["x^2"]), make_center(["x"], ["x"]),
                                                          {"x": "x"}, [["x"]])), False),
    }
    ok = all(rep.excessive is want for rep, want in checks.values())
    return ok, "; ".join(f"{k}: {rep.excessive}" for k, (rep, _) in checks.items())


def determinism_criterion():
    import tempfile

    mismatches, runs = [], 0
    with tempfile.TemporaryDirectory() as tmp:
        cache = DiskCache(tmp)
        for c in ALL:
            spec = parse_problem(problem_text(c))
            for cmd in COMMANDS:
                outs = []
                for mode in ("off", "cold", "warm"):
                    with using_cache(cache if mode != "off" else None):
                        try:
                            outs.append(render(run_command(spec, cmd)))
                        except DncError as exc:
                            outs.append(f"{type(exc).__name__}: {exc}")
                runs += 1
                if len(set(outs)) != 1:
                    mismatches.append(f"{c}/{cmd}")
    return not mismatches, f"{runs} command/center pairs identical with cache off, cold and warm" + (
        f"; differing {mismatches}" if mismatches else "")


CRITERIA = {
    1: ("Rees structure", rees_structure_criterion),
    2: ("generic fiber", generic_fiber_criterion),
    3: ("special fiber is the normal cone", special_fiber_criterion),
    4: ("classical deformation comparison", classical_deformation_criterion),
    5: ("blow-up charts", blowup_charts_criterion),
    6: ("classical blow-up comparison", classical_blowup_criterion),
    7: ("deformation as blow-up", deformation_blowup_criterion),
    8: ("infinitesimal neighborhoods", inf_criterion),
    9: ("multiplicativity", multiplicativity_criterion),
    10: ("excessive squares", excessive_criterion),
    11: ("determinism", determinism_criterion),
}


def evaluate(k: int) -> tuple[bool, str]:
    title, fn = CRITERIA[k]
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failure, reported rather than hidden
        ok, detail = False, f"raised {type(exc).__name__}: {exc}"
    line = f"ACCEPTANCE {k} {'PASS' if ok else 'FAIL'} {title}: {detail}"
    RESULTS[k] = (ok, title, line)
    print(line)
    return ok, line


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k):
    ok, line = evaluate(k)
    assert ok, line


def test_suite_runs_within_budget():
    start = time.perf_counter()
    with contextlib.redirect_stdout(io.StringIO()):
        for k in sorted(CRITERIA):
            if k != 11:
                CRITERIA[k][1]()
    elapsed = time.perf_counter() - start
    print(f"ACCEPTANCE timing: criteria 1-10 in {elapsed:.1f}s")
    assert elapsed < 60


if __name__ == "__main__":
    status = 0
    for k in sorted(CRITERIA):
        ok, _ = evaluate(k)
        status |= not ok
    sys.exit(status)
