"""Command-line front end: ``dnc <command> --input FILE``.

Reports are JSON with sorted keys, so identical inputs give identical bytes.
Exit status is 0 on success, 2 when a checked statement comes out false and 1
on errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from .blowup import (
    blowup_charts,
    check_excessive,
    cocycle_check,
    exceptional_divisor,
    transition,
    verify_deformation_as_blowup,
)
from .cache import DiskCache, using_cache
from .classical import compare_classical_blowup, compare_classical_deformation
from .dgalg import SemifreeCDGA, pi0
from .dsl import ProblemSpec, parse_problem
from .errors import DncError
from .homology import HomologyTable, homology_table
from .infnbhd import (
    filtration_tower,
    inf_neighborhood,
    koszul,
    pi0_ideal_check,
    recovers_center,
    verify_inf_triangles,
)
from .rees import (
    compare_special_fiber,
    deformation_fiber,
    generic_fiber_basis,
    generic_fiber_check,
    normal_cone_model,
    rees_extended,
    rees_structure,
)

COMMANDS = (
    "rees", "fiber", "normal-cone", "blowup", "exceptional", "compare-deformation", "compare-blowup",
    "infnbhd", "check-inf", "check-excessive", "deformation-as-blowup", "homology", "pi0",
)


@dataclass(frozen=True)
class Options:
    cutoff: int | None = None
    weights: tuple[int, int] | None = None
    hdegs: tuple[int, int] | None = None
    n: int | None = None
    at: str = "special"


def _presentation(A: SemifreeCDGA) -> dict:
    return {**A.describe(), "pi0": pi0(A).describe()}


def _table(A: SemifreeCDGA, hdegs, weights, D: int) -> dict:
    top = A.max_hdeg()
    if hdegs is None:
        hdegs = (0, top if top is not None else 2)
    return homology_table(A, hdegs, weights, D).to_dict()


def _cutoff(spec: ProblemSpec, opts: Options) -> int:
    return opts.cutoff if opts.cutoff is not None else spec.cutoff


def _weights(spec: ProblemSpec, opts: Options, default):
    return opts.weights or spec.weights or default


def _hdegs(spec: ProblemSpec, opts: Options):
    return opts.hdegs or spec.hdegs


# ---------- commands ----------

def cmd_rees(spec, opts):
    R = rees_extended(spec.center_presentation())
    s = rees_structure(R)
    generic = generic_fiber_check(R)
    result = {
        "presentation": _presentation(R.cdga),
        "structure": {"nonpositive_weights_free": s.nonpositive_free,
                      "generated_in_weight_one": s.generated_in_weight_one,
                      "weight_one_image": s.fil1_image, "weight_one_image_is_ideal": s.fil1_equals_ideal,
                      "weight_one_tinv_torsion_free": s.weight_one_torsion_free},
        "generic_fiber": generic,
        "homology": _table(R.cdga, _hdegs(spec, opts), _weights(spec, opts, (-1, 1)), _cutoff(spec, opts)),
    }
    return result, s.ok and generic


def cmd_fiber(spec, opts):
    R = rees_extended(spec.center_presentation())
    if opts.at == "generic":
        gb, expected = generic_fiber_basis(R)
        ok = generic_fiber_check(R)
        F = deformation_fiber(R, "generic").cdga
        return {"at": "generic", "presentation": F.describe(), "basis": gb.strings(),
                "order": gb.order.describe(), "expected": sorted(str(p) for p in expected)}, ok
    D = _cutoff(spec, opts)
    rep = compare_special_fiber(R, D, hdegs=_hdegs(spec, opts) or (0, 2), weights=_weights(spec, opts, (0, 2)))
    F = deformation_fiber(R, "special").cdga
    result = {"at": "special", "presentation": _presentation(F),
              "matches_normal_cone": rep.presentation_equal, "tables_agree": rep.tables_agree,
              "band": rep.band, "homology": rep.fiber_table.to_dict()}
    return result, rep.presentation_equal and bool(rep.tables_agree)


def cmd_normal_cone(spec, opts):
    N = normal_cone_model(spec.center_presentation())
    return {"presentation": _presentation(N),
            "homology": _table(N, _hdegs(spec, opts), _weights(spec, opts, (0, 2)), _cutoff(spec, opts))}, None


def cmd_blowup(spec, opts):
    charts = blowup_charts(spec.center_presentation())
    D = _cutoff(spec, opts)
    out = []
    for ch in charts:
        entry = ch.describe()
        top = ch.cdga.max_hdeg()
        if top >= 1:
            t = homology_table(ch.cdga, (1, top), 0, D)
            entry["higher_homology_vanishes"] = t.vanishes_above(0)
            entry["homology"] = t.to_dict()
        else:
            entry["higher_homology_vanishes"] = True
        out.append(entry)
    trans = []
    n = len(charts)
    for j in range(1, n + 1):
        for k in range(1, n + 1):
            if j != k:
                trans.append(transition(charts, j, k).to_dict())
    cocycles = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                if len({i, j, k}) == 3:
                    cocycles[f"{i},{j},{k}"] = cocycle_check(charts, i, j, k)
    ok = all(t["chain_map"] and t["isomorphism"] for t in trans) and all(cocycles.values())
    return {"charts": out, "transitions": trans, "cocycles": cocycles, "empty": n == 0}, ok


def cmd_exceptional(spec, opts):
    out = []
    for ch in blowup_charts(spec.center_presentation()):
        E = exceptional_divisor(ch)
        out.append({"index": ch.index, "exceptional_equation": str(ch.exceptional_equation),
                    "presentation": _presentation(E), "empty": pi0(E).is_zero_ring()})
    return {"charts": out}, None


def cmd_compare_deformation(spec, opts):
    rep = compare_classical_deformation(spec.center_presentation())
    return rep.to_dict(), rep.ok


def cmd_compare_blowup(spec, opts):
    rep = compare_classical_blowup(spec.center_presentation())
    return rep.to_dict(), rep.ok


def cmd_infnbhd(spec, opts):
    n = opts.n if opts.n is not None else 1
    X = inf_neighborhood(rees_extended(spec.center_presentation()), n)
    return {"n": n, "presentation": X.cdga.describe(), "kernel": X.pi0_kernel().strings(),
            "homology": X.table(_cutoff(spec, opts), _hdegs(spec, opts)).to_dict()}, None


def cmd_check_inf(spec, opts):
    c = spec.center_presentation()
    R = rees_extended(c)
    top = opts.n if opts.n is not None else 3
    D = _cutoff(spec, opts)
    x0 = recovers_center(R, D)
    kernels = [pi0_ideal_check(c, n) for n in range(1, top + 1)]
    offsets = None
    for r in kernels:
        offs = {k - r.n for k in r.matches}
        offsets = offs if offsets is None else offsets & offs
    offsets = sorted(offsets or [])
    triangles = [verify_inf_triangles(c, n, D) for n in range(1, top + 1)]
    tower = filtration_tower(R, top)
    tri_ok = all(t.ok for t in triangles if t.comparable)
    tower_ok = all(l.surjects_on_previous and l.nilpotent for l in tower[1:])
    ok = x0["pi0"] and x0["homology"] and bool(offsets) and tri_ok and tower_ok
    return {
        "x0": x0,
        "kernels": [r.to_dict() for r in kernels],
        "consistent_offsets": offsets,
        "triangles": [t.to_dict() for t in triangles],
        "tower": [l.to_dict() for l in tower],
    }, ok


def cmd_check_excessive(spec, opts):
    data = spec.square()
    rep = check_excessive(data)
    return {"declared_square": spec.has_square, **rep.to_dict()}, rep.excessive


def cmd_deformation_as_blowup(spec, opts):
    rep = verify_deformation_as_blowup(spec.center_presentation())
    return rep.to_dict(), rep.ok


def cmd_homology(spec, opts):
    R = rees_extended(spec.center_presentation())
    return {"homology": _table(R.cdga, _hdegs(spec, opts), _weights(spec, opts, (0, 1)),
                               _cutoff(spec, opts))}, None


def cmd_pi0(spec, opts):
    c = spec.center_presentation()
    R = rees_extended(c)
    return {"rees": pi0(R.cdga).describe(), "koszul": pi0(koszul(c)).describe(),
            "special_fiber": pi0(deformation_fiber(R, "special").cdga).describe()}, None


HANDLERS: dict[str, Callable] = {
    "rees": cmd_rees, "fiber": cmd_fiber, "normal-cone": cmd_normal_cone, "blowup": cmd_blowup,
    "exceptional": cmd_exceptional, "compare-deformation": cmd_compare_deformation,
    "compare-blowup": cmd_compare_blowup, "infnbhd": cmd_infnbhd, "check-inf": cmd_check_inf,
    "check-excessive": cmd_check_excessive, "deformation-as-blowup": cmd_deformation_as_blowup,
    "homology": cmd_homology, "pi0": cmd_pi0,
}


def run_command(spec: ProblemSpec, command: str, opts: Options | None = None) -> dict:
    """Run one command; the verdict is None for commands that only compute."""
    if command not in HANDLERS:
        raise ValueError(f"unknown command {command!r}")
    opts = opts or Options()
    result, verdict = HANDLERS[command](spec, opts)
    return {"command": command, "input": spec.to_dict(), "result": result, "verdict": verdict}


def render(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def _range(text: str) -> tuple[int, int]:
    parts = text.split("..")
    try:
        if len(parts) == 1:
            v = int(parts[0])
            return v, v
        if len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
            if lo <= hi:
                return lo, hi
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dnc", description="Rees algebras, deformations and blow-ups of presented centers.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--input", required=True, help="problem file")
    p.add_argument("--cutoff", type=int)
    p.add_argument("--weight", type=_range)
    p.add_argument("--hdeg", type=_range)
    p.add_argument("--n", type=int, help="neighborhood order")
    p.add_argument("--at", choices=("special", "generic"), default="special", help="fiber to extract")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--timing", action="store_true", help="print elapsed time on stderr")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    status = 0
    try:
        text = Path(args.input).read_text(encoding="utf-8")
        spec = parse_problem(text)
        opts = Options(args.cutoff, args.weight, args.hdeg, args.n, args.at)
        cache = None if args.no_cache else DiskCache()
        with warnings.catch_warnings():
            warnings.simplefilter("default")
            with using_cache(cache):
                report = run_command(spec, args.command, opts)
        if report["verdict"] is False:
            status = 2
    except (DncError, ValueError, OSError) as exc:
        report = {"command": args.command, "error": {"type": type(exc).__name__, "message": str(exc)}}
        print(f"dnc: {type(exc).__name__}: {exc}", file=sys.stderr)
        status = 1
    out = render(report)
    if args.out:
        Path(args.out).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)
    if args.timing:
        print(f"elapsed {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
