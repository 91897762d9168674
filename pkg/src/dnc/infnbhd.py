"""Infinitesimal neighborhoods as weight-0 parts of the Rees algebra modulo tinv^(n+1)."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .dgalg import GeneratorSpec, SemifreeCDGA, derived_quotient, make_cdga, pi0, polynomial_algebra
from .errors import CutoffTooSmall
from .homology import HomologyTable, homology_table
from .polycore import GroebnerBasis, Ring, buchberger, eliminate, ideal_contains, ideal_equal, ideal_power, transfer
from .rees import CenterPresentation, ReesPresentation, normal_cone_model, rees_extended


@dataclass(frozen=True)
class InfNeighborhood:
    n: int
    cdga: SemifreeCDGA
    rees: ReesPresentation
    cell: str

    def pi0_kernel(self) -> GroebnerBasis:
        """Kernel of Q[z] -> weight-0 part of pi0, as an ideal of Q[z]."""
        P = pi0(self.cdga)
        amb = self.rees.center.ambient
        cut = eliminate(list(P.relations), amb.names, P.ring)
        return buchberger([transfer(p, amb) for p in cut], ring=amb)

    def table(self, D: int, hdegs=None) -> HomologyTable:
        top = self.cdga.max_hdeg()
        return homology_table(self.cdga, hdegs if hdegs is not None else (0, top), 0, D)


def inf_neighborhood(R: ReesPresentation, n: int, cell: str = "zeta") -> InfNeighborhood:
    """R tensored with Q[z][tinv]//tinv^(n+1); only its weight-0 part is used.

    The new cell has weight -(n+1) because d preserves weight and tinv^(n+1)
    has that weight.
    """
    if n < 0:
        raise ValueError("neighborhood order must be non-negative")
    A = R.cdga
    while cell in A.names:
        cell = "_" + cell
    gens = list(A.gens) + [GeneratorSpec(cell, 1, -(n + 1), 0)]
    ring = Ring(A.names + (cell,), odd=[g.name for g in gens if g.hdeg % 2])
    diffs = {g.name: transfer(A.diff[g.name], ring) for g in A.gens}
    diffs[cell] = ring.gen(R.param) ** (n + 1)
    return InfNeighborhood(n, make_cdga(A.base, gens, diffs, A.base_degrees), R, cell)


def koszul(center: CenterPresentation) -> SemifreeCDGA:
    return derived_quotient(polynomial_algebra(center.ambient), [(f, 0) for f in center.gens],
                            names=list(center.cells))


def recovers_center(R: ReesPresentation, D: int = 6) -> dict:
    """X^(0) against the Koszul presentation: pi0 kernel (f) and equal homology in the band."""
    X0 = inf_neighborhood(R, 0)
    c = R.center
    amb = c.ambient
    pi0_ok = ideal_equal(list(X0.pi0_kernel().basis), list(c.gens), ring=amb)
    K = koszul(c)
    if pi0(X0.cdga).is_zero_ring() and pi0(K).is_zero_ring():
        # homology is a module over H_0 = 0, so both sides are acyclic
        return {"pi0": pi0_ok, "homology": True, "comparable": True, "band": None}
    top = max(X0.cdga.max_hdeg(), K.max_hdeg())
    ta = homology_table(X0.cdga, (0, top), 0, D)
    tb = homology_table(K, (0, top), 0, D)
    comparable = ta.mode == tb.mode == "native"
    return {"pi0": pi0_ok, "homology": comparable and ta.agrees_with(tb), "comparable": comparable,
            "band": min(ta.certified_band, tb.certified_band)}


def _chi(table: HomologyTable, w: int, d: int) -> int:
    return table.euler(w, d)


@dataclass
class TriangleReport:
    n: int
    band: int
    first: dict[int, bool] = field(default_factory=dict)
    second: dict[int, bool] = field(default_factory=dict)
    comparable: bool = True

    @property
    def failures(self) -> list[tuple[str, int, int]]:
        out = [("i", self.n, d) for d, ok in self.first.items() if not ok]
        out += [("ii", self.n, d) for d, ok in self.second.items() if not ok]
        return out

    @property
    def ok(self) -> bool:
        return self.comparable and not self.failures

    def to_dict(self) -> dict:
        return {"n": self.n, "band": self.band, "comparable": self.comparable,
                "triangle_i": {str(d): v for d, v in sorted(self.first.items())},
                "triangle_ii": {str(d): v for d, v in sorted(self.second.items())},
                "failures": [list(f) for f in self.failures], "verdict": self.ok}


def verify_inf_triangles(center: CenterPresentation, n: int, D: int = 6) -> TriangleReport:
    """Euler characteristic additivity per internal degree for

    (i)  Sym^n(conormal) -> O_X(n) -> O_X(n-1)
    (ii) weight n+1 of R  -> O_Y    -> O_X(n)
    """
    if n < 1:
        raise ValueError("triangles are indexed by n >= 1")
    R = rees_extended(center)
    Xn = inf_neighborhood(R, n)
    Xp = inf_neighborhood(R, n - 1)
    cone = normal_cone_model(center)
    tn, tp = Xn.table(D), Xp.table(D)
    tsym = homology_table(cone, (0, cone.max_hdeg()), n, D)
    trees = homology_table(R.cdga, (0, R.cdga.max_hdeg()), n + 1, D)
    tables = (tn, tp, tsym, trees)
    band = min(t.certified_band for t in tables)
    if band < 0:
        raise CutoffTooSmall(f"cutoff {D} leaves no certified degrees")
    m = center.ambient.nvars
    report = TriangleReport(n, band, comparable=all(t.mode == "native" for t in tables))
    for d in range(0, band + 1):
        report.first[d] = _chi(tsym, n, d) == _chi(tn, 0, d) - _chi(tp, 0, d)
        oy = comb(d + m - 1, m - 1) if m else int(d == 0)
        report.second[d] = _chi(trees, n + 1, d) == oy - _chi(tn, 0, d)
    return report


@dataclass
class KernelReport:
    n: int
    kernel: list[str]
    matches: list[int]

    def to_dict(self) -> dict:
        return {"n": self.n, "kernel": self.kernel, "matching_powers": self.matches,
                "offsets": sorted(k - self.n for k in self.matches)}


def pi0_ideal_check(center: CenterPresentation, n: int) -> KernelReport:
    """Which of I^n, I^(n+1) is the kernel of pi0 O_Y -> pi0 O_X(n)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    X = inf_neighborhood(rees_extended(center), n)
    K = X.pi0_kernel()
    amb = center.ambient
    matches = [k for k in (n, n + 1)
               if ideal_equal(list(K.basis), ideal_power(list(center.gens), k, amb), ring=amb)]
    return KernelReport(n, K.strings(), matches)


def consistent_index(reports: list[KernelReport]) -> int | None:
    """The offset k - n shared by every report, or None if there is none or it is ambiguous."""
    common = None
    for r in reports:
        offs = {k - r.n for k in r.matches}
        common = offs if common is None else common & offs
    if not common or len(common) != 1:
        return None
    return next(iter(common))


@dataclass
class TowerLevel:
    n: int
    kernel: list[str]
    surjects_on_previous: bool | None
    graded_piece: bool | None
    nilpotent: bool | None

    def to_dict(self) -> dict:
        return {"n": self.n, "kernel": self.kernel, "surjects_on_previous": self.surjects_on_previous,
                "graded_piece": self.graded_piece, "nilpotent": self.nilpotent}


def filtration_tower(R: ReesPresentation, N_max: int, nil_bound: int = 3) -> list[TowerLevel]:
    """X(0) -> ... -> X(N_max) at pi0, with the connecting maps checked.

    For n >= 1 the map pi0 O_X(n) -> pi0 O_X(n-1) is onto when K_n is inside
    K_(n-1); its kernel K_(n-1)/K_n should be I^k/I^(k+1) for the power k
    realizing K_(n-1); and K_(n-1)^p lies in K_n for some p <= nil_bound.
    """
    if N_max < 0:
        raise ValueError("N_max must be non-negative")
    amb = R.center.ambient
    gens = list(R.center.gens)
    levels: list[TowerLevel] = []
    prev = None
    for n in range(N_max + 1):
        K = list(inf_neighborhood(R, n).pi0_kernel().basis)
        if prev is None:
            levels.append(TowerLevel(n, buchberger(K, ring=amb).strings(), None, None, None))
        else:
            onto = ideal_contains(prev, K, amb)
            graded = any(
                ideal_equal(prev, ideal_power(gens, k, amb), ring=amb)
                and ideal_equal(K, ideal_power(gens, k + 1, amb), ring=amb)
                for k in (n - 1, n, n + 1)
            )
            nil = False
            for p in range(1, nil_bound + 1):
                power = ideal_power(prev, p, amb) if prev else []
                if ideal_contains(K, power, amb):
                    nil = True
                    break
            levels.append(TowerLevel(n, buchberger(K, ring=amb).strings(), onto, graded, nil))
        prev = K
    return levels
