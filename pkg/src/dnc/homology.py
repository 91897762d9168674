"""Degree-truncated homology of semifree cdgas by exact linear algebra.

The differential preserves homological-degree-minus-one, weight and internal
degree, so every (hdeg, weight, degree) slice is a finite complex once the
grading is positive on the polynomial variables.  A grading is chosen in
three steps: the native degrees, a linear-programming regrade, and finally
homogenization with a fresh variable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .dgalg import GeneratorSpec, SemifreeCDGA, make_cdga
from .errors import CutoffTooSmall, DegreeMismatch
from .linalg import rank
from .polycore import Polynomial, Ring


NATIVE, REGRADED, HOMOGENIZED, GIVEN = "native", "regraded", "homogenized", "given"


@dataclass(frozen=True)
class Grading:
    """A positive grading of ``algebra``; phi = M*degree + P*weight is > 0 on hdeg-0 variables."""

    algebra: SemifreeCDGA
    mode: str
    M: int
    P: int

    @property
    def degrees(self) -> dict[str, int]:
        return dict(zip(self.algebra.names, self.algebra.degree))

    @property
    def homogenized(self) -> bool:
        return self.mode == HOMOGENIZED

    def phi(self, i: int) -> int:
        A = self.algebra
        return self.M * A.degree[i] + self.P * A.weight[i]


def is_homogeneous(A: SemifreeCDGA) -> bool:
    for g in A.gens:
        for e in A.diff[g.name].terms:
            if A.degree_of(e) != g.degree:
                return False
    return True


def _pointing(A: SemifreeCDGA) -> tuple[int, int] | None:
    """Find integers M > 0, P with M*deg + P*weight > 0 on all hdeg-0 variables."""
    lo, hi = None, None  # open interval for c = P/M
    for i in range(A.ring.nvars):
        if A.hdeg[i]:
            continue
        deg, wt = A.degree[i], A.weight[i]
        if wt == 0:
            if deg <= 0:
                return None
        elif wt > 0:
            b = Fraction(-deg, wt)
            lo = b if lo is None else max(lo, b)
        else:
            b = Fraction(deg, -wt)
            hi = b if hi is None else min(hi, b)
    if lo is not None and hi is not None and lo >= hi:
        return None
    if lo is None and hi is None:
        c = Fraction(0)
    elif lo is None:
        c = min(Fraction(0), hi - 1)
    elif hi is None:
        c = max(Fraction(0), lo + 1)
    else:
        c = (lo + hi) / 2
    return c.denominator, c.numerator


def _lp_regrade(A: SemifreeCDGA) -> dict[str, int] | None:
    import numpy as np
    from scipy.optimize import linprog

    n = A.ring.nvars
    rows = []
    for g in A.gens:
        gi = A.ring.index[g.name]
        for e in A.diff[g.name].terms:
            row = [0.0] * n
            for i, x in enumerate(e):
                row[i] += x
            row[gi] -= 1
            if any(row):
                rows.append(row)
    bounds = [(1, None) if A.hdeg[i] == 0 else (0, None) for i in range(n)]
    kwargs = {}
    if rows:
        kwargs = {"A_eq": np.array(rows), "b_eq": np.zeros(len(rows))}
    res = linprog(np.ones(n), bounds=bounds, method="highs", **kwargs)
    if res.status != 0:
        return None
    vals = [Fraction(float(x)).limit_denominator(1000) for x in res.x]
    scale = math.lcm(*(v.denominator for v in vals)) if vals else 1
    ints = [int(v * scale) for v in vals]
    for i, v in enumerate(ints):
        if v < (1 if A.hdeg[i] == 0 else 0):
            return None
    for row in rows:
        if sum(int(r) * v for r, v in zip(row, ints)) != 0:
            return None
    return dict(zip(A.names, ints))


def homogenize(A: SemifreeCDGA, name: str = "h") -> SemifreeCDGA:
    """Pad every differential with powers of a fresh degree-1 base variable."""
    taken = set(A.names)
    h, k = name, 1
    while h in taken:
        k += 1
        h = f"{name}{k}"
    base = Ring(A.base.names + (h,))
    base_deg = [max(1, d) for d in A.base_degrees] + [1]
    deg = dict(zip(A.base.names, base_deg))
    deg[h] = 1
    order = sorted(A.gens, key=lambda g: g.hdeg)
    for g in order:
        if g.hdeg == 0:
            deg[g.name] = max(1, g.degree)
    tmp_ring = Ring(base.names + A.gen_names, A.ring.order, [g.name for g in A.gens if g.hdeg % 2])
    hi = tmp_ring.index[h]
    diffs = {}
    for g in order:
        if g.hdeg == 0:
            continue
        dg = A.diff[g.name]
        if not dg:
            deg[g.name] = max(0, g.degree)
            continue
        tdeg = {}
        for e in dg.terms:
            tdeg[e] = sum(x * deg[A.names[i]] for i, x in enumerate(e) if x)
        top = max(tdeg.values())
        deg[g.name] = top
        terms = {}
        for e, c in dg.terms.items():
            new = [0] * tmp_ring.nvars
            for i, x in enumerate(e):
                if x:
                    new[tmp_ring.index[A.names[i]]] = x
            new[hi] = top - tdeg[e]
            terms[tuple(new)] = c
        diffs[g.name] = Polynomial(tmp_ring, terms)
    gens = [GeneratorSpec(g.name, g.hdeg, g.weight, deg[g.name]) for g in A.gens]
    return make_cdga(base, gens, diffs, [deg[n] for n in base.names])


def choose_grading(A: SemifreeCDGA, degrees: Mapping[str, int] | None = None) -> Grading:
    if degrees is not None:
        B = A.with_degrees(degrees)
        pt = _pointing(B)
        if not is_homogeneous(B) or pt is None:
            raise DegreeMismatch("the supplied degrees do not give a finite homogeneous grading")
        return Grading(B, GIVEN, *pt)
    if is_homogeneous(A):
        pt = _pointing(A)
        if pt is not None:
            return Grading(A, NATIVE, *pt)
    regrade = _lp_regrade(A)
    if regrade is not None:
        B = A.with_degrees(regrade)
        return Grading(B, REGRADED, *_pointing(B))
    B = homogenize(A)
    pt = _pointing(B)
    if pt is None:
        raise DegreeMismatch("homogenization did not produce a positive grading")
    return Grading(B, HOMOGENIZED, *pt)


# ---------- slice enumeration ----------

def _slice_monomials(gr: Grading, k: int, w: int, D: int) -> dict[int, list[tuple]]:
    """Monomials of hdeg k and weight w grouped by internal degree <= D."""
    A = gr.algebra
    n = A.ring.nvars
    zero_vars = [i for i in range(n) if A.hdeg[i] == 0]
    pos_vars = [i for i in range(n) if A.hdeg[i] > 0]
    phis = {i: gr.phi(i) for i in range(n)}
    budget = gr.M * D + gr.P * w
    out: dict[int, list[tuple]] = {}

    def fill_zero(exp, j, rest, wt):
        if j == len(zero_vars):
            if wt == w:
                d = A.degree_of(exp)
                out.setdefault(d, []).append(tuple(exp))
            return
        i = zero_vars[j]
        p = phis[i]
        a = 0
        while a * p <= rest:
            exp[i] = a
            fill_zero(exp, j + 1, rest - a * p, wt + a * A.weight[i])
            a += 1
        exp[i] = 0

    def fill_pos(exp, j, left):
        if j == len(pos_vars):
            if left == 0:
                fill_zero(exp, 0, budget - sum(phis[i] * exp[i] for i in pos_vars),
                          sum(A.weight[i] * exp[i] for i in pos_vars))
            return
        i = pos_vars[j]
        h = A.hdeg[i]
        cap = 1 if i in A.ring.odd else left // h
        for a in range(0, min(cap, left // h) + 1):
            exp[i] = a
            fill_pos(exp, j + 1, left - a * h)
        exp[i] = 0

    if k >= 0:
        fill_pos([0] * n, 0, k)
    for d in out:
        out[d].sort(reverse=True)
    return out


def weight_piece(A: SemifreeCDGA, w: int, D: int, hdegs: Iterable[int] | None = None,
                 grading: Grading | None = None) -> dict[tuple[int, int], list[Polynomial]]:
    """Monomial basis of the weight-w part, keyed by (hdeg, internal degree <= D)."""
    if D < 0:
        raise ValueError("cutoff must be non-negative")
    gr = grading or choose_grading(A)
    if hdegs is None:
        top = gr.algebra.max_hdeg()
        hdegs = range(0, (top if top is not None else D) + 1)
    ring = gr.algebra.ring
    out = {}
    for k in hdegs:
        for d, monos in sorted(_slice_monomials(gr, k, w, D).items()):
            out[(k, d)] = [Polynomial._raw(ring, {e: Fraction(1)}) for e in monos]
    return out


# ---------- tables ----------

@dataclass
class HomologyTable:
    cutoff: int
    certified_band: int
    entries: dict[tuple[int, int, int], int]
    chains: dict[tuple[int, int, int], int]
    mode: str = NATIVE
    degrees: dict[str, int] = field(default_factory=dict)
    hdegs: tuple[int, ...] = ()
    weights: tuple[int, ...] = ()

    @property
    def homogenized(self) -> bool:
        return self.mode == HOMOGENIZED

    @property
    def regraded(self) -> bool:
        return self.mode == REGRADED

    def dim(self, k: int, w: int, d: int) -> int:
        return self.entries.get((k, w, d), 0)

    def is_provisional(self, d: int) -> bool:
        return d > self.certified_band

    def certified(self) -> dict[tuple[int, int, int], int]:
        return {key: v for key, v in self.entries.items() if key[2] <= self.certified_band}

    def nonzero(self, certified_only: bool = True) -> dict[tuple[int, int, int], int]:
        src = self.certified() if certified_only else self.entries
        return {key: v for key, v in src.items() if v}

    def vanishes_above(self, k: int) -> bool:
        """True when every certified entry of hdeg > k is zero."""
        return not any(key[0] > k for key in self.nonzero())

    def euler(self, w: int, d: int, chains: bool = False) -> int:
        src = self.chains if chains else self.entries
        return sum((-1) ** key[0] * v for key, v in src.items() if key[1] == w and key[2] == d)

    def agrees_with(self, other: HomologyTable, band: int | None = None) -> bool:
        band = min(self.certified_band, other.certified_band) if band is None else band
        mine = {k: v for k, v in self.nonzero(False).items() if k[2] <= band}
        theirs = {k: v for k, v in other.nonzero(False).items() if k[2] <= band}
        return mine == theirs

    def to_dict(self) -> dict:
        return {
            "cutoff": self.cutoff,
            "certified_band": self.certified_band,
            "grading": self.mode,
            "homogenized": self.homogenized,
            "degrees": dict(sorted(self.degrees.items())),
            "entries": [
                {"hdeg": k, "weight": w, "degree": d, "dim": v, "chains": self.chains.get((k, w, d), 0),
                 "provisional": d > self.certified_band}
                for (k, w, d), v in sorted(self.entries.items())
            ],
        }


def certified_band(A: SemifreeCDGA, D: int) -> int:
    top = 0
    for g in A.gens:
        for e in A.diff[g.name].terms:
            top = max(top, A.degree_of(e))
    return D - top


def _as_range(r, default) -> list[int]:
    if r is None:
        return list(default)
    if isinstance(r, int):
        return [r]
    if isinstance(r, tuple) and len(r) == 2:
        return list(range(r[0], r[1] + 1))
    return list(r)


def homology_table(A: SemifreeCDGA, hdegs=None, weights=0, D: int = 6,
                   degrees: Mapping[str, int] | None = None) -> HomologyTable:
    """Exact homology dimensions per (hdeg, weight, internal degree <= D).

    Ranges may be an int, an inclusive (lo, hi) pair, or any iterable.
    """
    gr = choose_grading(A, degrees)
    B = gr.algebra
    band = certified_band(B, D)
    if band < 0:
        raise CutoffTooSmall(f"cutoff {D} is below the top differential degree {D - band}")
    top = B.max_hdeg()
    ks = _as_range(hdegs, range(0, (top if top is not None else 2) + 1))
    ws = _as_range(weights, [0])
    entries: dict = {}
    chains: dict = {}
    for w in ws:
        slices = {}

        def get(k):
            if k not in slices:
                slices[k] = _slice_monomials(gr, k, w, D) if k >= 0 else {}
            return slices[k]

        def d_rank(k, d):
            if k <= 0:
                return 0
            return rank(B.d_monomial(e) for e in get(k).get(d, ()))

        for k in ks:
            here = get(k)
            degs = set(here) | set(get(k + 1))
            for d in degs:
                c = len(here.get(d, ()))
                chains[(k, w, d)] = c
                entries[(k, w, d)] = c - d_rank(k, d) - d_rank(k + 1, d)
    return HomologyTable(D, band, entries, chains, gr.mode, gr.degrees, tuple(ks), tuple(ws))
