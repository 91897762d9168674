"""Derived blow-ups through affine charts of the Rees presentation.

Chart j inverts X_j, keeps the weight-0 part (y_i = X_i / X_j and
s_j = tinv * X_j) and cancels the contractible pair (e_j, s_j), leaving
d e_i = y_i * f_j - f_i for i != j.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .dgalg import Pi0Presentation, SemifreeCDGA, cancel_cell, derived_quotient, pi0, weight_zero_localization
from .errors import EmptyCenter, IndexOutOfRange
from .polycore import Polynomial, Ring, buchberger, ideal_equal, substitute, transfer
from .rees import CenterPresentation, make_center, rees_extended
from .ringmaps import IsoReport, check_isomorphism


@dataclass(frozen=True)
class ChartPresentation:
    index: int  # 1-based
    cdga: SemifreeCDGA
    exceptional_equation: Polynomial
    center: CenterPresentation
    chart_vars: Mapping[int, str]  # generator index (1-based, != index) -> variable name

    def pi0(self) -> Pi0Presentation:
        return pi0(self.cdga)

    def describe(self) -> dict:
        return {
            "index": self.index,
            "exceptional_equation": str(self.exceptional_equation),
            "chart_variables": {str(i): v for i, v in sorted(self.chart_vars.items())},
            "presentation": self.cdga.describe(),
            "pi0": self.pi0().describe(),
        }


def chart_variable_names(center: CenterPresentation, stem: str = "y") -> dict[int, str]:
    taken = set(center.ambient.names) | set(center.cells) | {center.param} | set(center.labels)
    names = {}
    for i in range(1, center.n + 1):
        name = f"{stem}{i}"
        while name in taken:
            name = "_" + name
        names[i] = name
    return names


def blowup_chart(center: CenterPresentation, j: int, stem: str = "y") -> ChartPresentation:
    n = center.n
    if not 1 <= j <= n:
        raise IndexOutOfRange(f"chart index {j} outside 1..{n}")
    R = rees_extended(center)
    ynames = chart_variable_names(center, stem)
    s = "s_" + center.cells[j - 1]
    rename = {center.labels[i - 1]: ynames[i] for i in range(1, n + 1) if i != j}
    rename[center.param] = s
    A = weight_zero_localization(R.cdga, center.labels[j - 1], rename)
    C = cancel_cell(A, center.cells[j - 1], s)
    chart_vars = {i: ynames[i] for i in range(1, n + 1) if i != j}
    return ChartPresentation(j, C, center.gens[j - 1], center, chart_vars)


def blowup_charts(center: CenterPresentation, stem: str = "y") -> list[ChartPresentation]:
    """One chart per generator; an empty center has an empty blow-up."""
    return [blowup_chart(center, j, stem) for j in range(1, center.n + 1)]


def expected_chart_differential(chart: ChartPresentation, i: int) -> Polynomial:
    ring = chart.cdga.ring
    fj = transfer(chart.exceptional_equation, ring)
    return ring.gen(chart.chart_vars[i]) * fj - transfer(chart.center.gens[i - 1], ring)


def exceptional_divisor(chart: ChartPresentation, name: str = "eps") -> SemifreeCDGA:
    return derived_quotient(chart.cdga, [(chart.exceptional_equation, 0)], names=[name])


# ---------- gluing ----------

def _inverse_name(ring_names, stem="u") -> str:
    name, k = stem, 1
    while name in ring_names:
        k += 1
        name = f"{stem}{k}"
    return name


def _laurent(m: int, k: int, chart: ChartPresentation, ring: Ring, inv: Mapping[int, Polynomial]) -> Polynomial:
    """X_m / X_k written in the coordinates of ``chart`` (inv[k] stands for X_j / X_k)."""
    num = ring.one() if m == chart.index else ring.gen(chart.chart_vars[m])
    den = ring.one() if k == chart.index else inv[k]
    return num * den


def _localized_ring(chart: ChartPresentation, at: Sequence[int]) -> tuple[Ring, dict[int, Polynomial], list[Polynomial]]:
    """pi0 of ``chart`` with the chart variables y_k (k in ``at``) inverted."""
    P = chart.pi0()
    names = list(P.ring.names)
    invs = {}
    for k in at:
        u = _inverse_name(names, f"u{k}_")
        names.append(u)
        invs[k] = u
    ring = Ring(names)
    ideal = [transfer(p, ring) for p in P.relations]
    inv_polys = {}
    for k, u in invs.items():
        ideal.append(ring.gen(chart.chart_vars[k]) * ring.gen(u) - 1)
        inv_polys[k] = ring.gen(u)
    return ring, inv_polys, ideal


def _chart_images(src: ChartPresentation, dst: ChartPresentation, ring: Ring,
                  inv: Mapping[int, Polynomial], src_inv: Mapping[int, str] | None = None) -> dict:
    """Images of the chart variables of ``src`` in ``dst`` coordinates."""
    images = {}
    for m, name in src.chart_vars.items():
        images[name] = _laurent(m, src.index, dst, ring, inv)
    for m, name in (src_inv or {}).items():
        # inverse of y_m^(src) = X_src / X_m
        images[name] = _laurent(src.index, m, dst, ring, inv)
    return images


@dataclass
class TransitionReport:
    source: int
    target: int
    images: dict[str, str]
    cell_images: dict[str, str]
    chain_map: bool
    iso: IsoReport

    @property
    def ok(self) -> bool:
        return self.chain_map and self.iso.ok

    def to_dict(self) -> dict:
        return {"from": self.source, "to": self.target, "images": dict(sorted(self.images.items())),
                "cell_images": dict(sorted(self.cell_images.items())), "chain_map": self.chain_map,
                **self.iso.to_dict()}


def transition(charts: Sequence[ChartPresentation], j: int, k: int) -> TransitionReport:
    """Map from chart k to chart j on their overlap, checked against the reverse map."""
    n = len(charts)
    if not (1 <= j <= n and 1 <= k <= n) or j == k:
        raise IndexOutOfRange(f"need distinct chart indices in 1..{n}, got {j}, {k}")
    cj, ck = charts[j - 1], charts[k - 1]
    Lj, invj, Ij = _localized_ring(cj, [k])
    Lk, invk, Ik = _localized_ring(ck, [j])
    uj, uk = str(invj[k]), str(invk[j])
    fwd = _chart_images(ck, cj, Lj, invj, {j: uk})
    bwd = _chart_images(cj, ck, Lk, invk, {k: uj})
    iso = check_isomorphism(Lk, Ik, Lj, Ij, fwd, bwd)

    # cells: e_i^(k) -> e_i^(j) - y_i^(j) u e_k^(j), e_j^(k) -> -u e_k^(j)
    cells = ck.center.cells
    u = Lj.gen(uj)
    cell_images: dict[str, dict[str, Polynomial]] = {}
    for i in ck.chart_vars:
        if i == j:
            cell_images[cells[i - 1]] = {cells[k - 1]: -u}
        else:
            cell_images[cells[i - 1]] = {cells[i - 1]: Lj.one(),
                                         cells[k - 1]: -Lj.gen(cj.chart_vars[i]) * u}
    relation = buchberger([Lj.gen(cj.chart_vars[k]) * u - 1], ring=Lj)
    chain = True
    for e, combo in cell_images.items():
        lhs = Lj.zero()
        for cell, coeff in combo.items():
            lhs = lhs + coeff * transfer(cj.cdga.diff[cell], Lj)
        rhs = substitute(transfer(ck.cdga.diff[e], ck.pi0().ring), fwd, Lj)
        if not relation.contains(lhs - rhs):
            chain = False
    shown = {name: str(p) for name, p in fwd.items()}
    shown_cells = {e: " + ".join(f"({c})*{cell}" for cell, c in sorted(combo.items()))
                   for e, combo in cell_images.items()}
    return TransitionReport(k, j, shown, shown_cells, chain, iso)


def cocycle_check(charts: Sequence[ChartPresentation], i: int, j: int, k: int) -> bool:
    """On the triple overlap inside chart i, the map k -> j -> i agrees with k -> i."""
    ci, cj, ck = charts[i - 1], charts[j - 1], charts[k - 1]
    Li, invi, Ii = _localized_ring(ci, [j, k])
    gb = buchberger(Ii, ring=Li)
    # k -> i directly
    direct = _chart_images(ck, ci, Li, invi)
    # k -> j lands in chart j with y_k^(j) inverted; then j -> i
    Lj, invj, _ = _localized_ring(cj, [k])
    uj = str(invj[k])
    kj = _chart_images(ck, cj, Lj, invj)
    ji = _chart_images(cj, ci, Li, invi)
    ji[uj] = _laurent(j, k, ci, Li, invi)  # X_j / X_k in chart i
    for name, img in kj.items():
        composed = substitute(img, ji, Li)
        if not gb.contains(composed - direct[name]):
            return False
    return True


# ---------- excessive squares ----------

@dataclass(frozen=True)
class ExcessiveSquareData:
    """Centers f over A and f' over A', a map q: A -> A' and q(f_i) = sum_j coeffs[i][j] f'_j."""

    source: CenterPresentation
    target: CenterPresentation
    ring_map: Mapping[str, Polynomial]
    coeffs: tuple[tuple[Polynomial, ...], ...]

    def validate(self) -> None:
        A2 = self.target.ambient
        if len(self.coeffs) != self.source.n or any(len(row) != self.target.n for row in self.coeffs):
            raise ValueError("coefficient matrix must be n x n'")
        for f, row in zip(self.source.gens, self.coeffs):
            lhs = substitute(f, self.ring_map, A2)
            rhs = A2.zero()
            for c, g in zip(row, self.target.gens):
                rhs = rhs + transfer(c, A2) * g
            if lhs != rhs:
                raise ValueError(f"q({f}) = {lhs} is not {rhs}")


def make_square(source: CenterPresentation, target: CenterPresentation, ring_map: Mapping[str, object],
                coeffs: Sequence[Sequence[object]]) -> ExcessiveSquareData:
    A2 = target.ambient
    rm = {k: A2(v) for k, v in ring_map.items()}
    cs = tuple(tuple(A2(c) for c in row) for row in coeffs)
    data = ExcessiveSquareData(source, target, rm, cs)
    data.validate()
    return data


def base_change_square(center: CenterPresentation, ring_map: Mapping[str, object],
                       target_ambient: Ring | Sequence[str]) -> ExcessiveSquareData:
    """The square obtained by pulling the center back along q."""
    A2 = target_ambient if isinstance(target_ambient, Ring) else Ring(target_ambient)
    rm = {k: A2(v) for k, v in ring_map.items()}
    pulled = make_center(A2, [substitute(f, rm, A2) for f in center.gens])
    n = center.n
    coeffs = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
    return make_square(center, pulled, rm, coeffs)


def _minors(matrix: list[list[Polynomial]], size: int, ring: Ring) -> list[Polynomial]:
    import itertools

    rows = len(matrix)
    out = []
    for pick in itertools.combinations(range(rows), size):
        sub = [matrix[r] for r in pick]
        out.append(_det(sub, ring))
    return out


def _det(m: list[list[Polynomial]], ring: Ring) -> Polynomial:
    n = len(m)
    if n == 0:
        return ring.one()
    total = ring.zero()
    for c in range(n):
        if not m[0][c]:
            continue
        minor = [row[:c] + row[c + 1:] for row in m[1:]]
        term = m[0][c] * _det(minor, ring)
        total = total + term if c % 2 == 0 else total - term
    return total


@dataclass
class ExcessiveReport:
    classically_cartesian: bool
    conormal_surjective: bool
    method: str = "minors"
    band: int | None = None

    @property
    def excessive(self) -> bool:
        return self.classically_cartesian and self.conormal_surjective

    def to_dict(self) -> dict:
        return {"classically_cartesian": self.classically_cartesian,
                "conormal_surjective": self.conormal_surjective,
                "excessive": self.excessive, "method": self.method, "band": self.band}


def check_excessive(data: ExcessiveSquareData) -> ExcessiveReport:
    """Cartesian on pi0 iff (q(f)) = (f'); the conormal map sends e_i to sum_j c_ij e'_j,
    which is onto over A'/(f') iff (f') together with the n'-minors of c is the unit ideal."""
    data.validate()
    A2 = data.target.ambient
    pulled = [substitute(f, data.ring_map, A2) for f in data.source.gens]
    fprime = list(data.target.gens)
    cart = ideal_equal(pulled, fprime, ring=A2)
    matrix = [list(row) for row in data.coeffs]
    minors = _minors(matrix, data.target.n, A2) if data.target.n <= data.source.n else []
    surj = buchberger(fprime + minors, ring=A2).is_unit()
    return ExcessiveReport(cart, surj)


# ---------- blow-up versus deformation ----------

@dataclass
class DeformationBlowupReport:
    charts: dict[int, IsoReport] = field(default_factory=dict)
    t_chart_equal: bool = False

    @property
    def ok(self) -> bool:
        return self.t_chart_equal and all(r.ok for r in self.charts.values())

    def to_dict(self) -> dict:
        return {"t_chart_equal": self.t_chart_equal,
                "charts": {str(j): r.to_dict() for j, r in sorted(self.charts.items())},
                "ok": self.ok}


def verify_deformation_as_blowup(center: CenterPresentation, aux_param: str = "t_aux") -> DeformationBlowupReport:
    """Blow up (f_1..f_n, tinv) in Q[z, tinv] and compare with pi0 of the extended Rees algebra.

    The chart of tinv is the Rees algebra itself (y_i <-> X_i); every other
    chart j, with the strict transform of {tinv = 0} removed, is the Rees
    algebra with X_j inverted (X_j = 1/y_t, X_i = y_i/y_t).
    """
    n = center.n
    if n == 0:
        raise EmptyCenter("the deformation-as-blow-up comparison needs a nonempty center")
    R = rees_extended(center)
    P = R.pi0()
    tinv = center.param
    amb = Ring(center.ambient.names + (tinv,))
    big = make_center(amb, [transfer(f, amb) for f in center.gens] + [amb.gen(tinv)], param=aux_param)
    charts = blowup_charts(big, stem="y")
    t_index = n + 1
    report = DeformationBlowupReport()

    # chart of tinv: y_i <-> X_i
    tc = charts[t_index - 1]
    tp = tc.pi0()
    rename = {tc.chart_vars[i]: P.ring.gen(center.labels[i - 1]) for i in range(1, n + 1)}
    moved = [substitute(p, rename, P.ring) for p in tp.relations]
    report.t_chart_equal = ideal_equal(moved, list(P.relations), ring=P.ring)

    for j in range(1, n + 1):
        cj = charts[j - 1]
        Lj, inv, Ij = _localized_ring(cj, [t_index])
        w = str(inv[t_index])
        vname = _inverse_name(P.ring.names, "v")
        LR = Ring(P.ring.names + (vname,))
        xj = center.labels[j - 1]
        IR = [transfer(p, LR) for p in P.relations] + [LR.gen(xj) * LR.gen(vname) - 1]
        yt = cj.chart_vars[t_index]
        fwd = {xj: Lj.gen(w), vname: Lj.gen(yt)}
        for i in range(1, n + 1):
            if i != j:
                fwd[center.labels[i - 1]] = Lj.gen(cj.chart_vars[i]) * Lj.gen(w)
        bwd = {yt: LR.gen(vname), w: LR.gen(xj)}
        for i in range(1, n + 1):
            if i != j:
                bwd[cj.chart_vars[i]] = LR.gen(center.labels[i - 1]) * LR.gen(vname)
        report.charts[j] = check_isomorphism(LR, IR, Lj, Ij, fwd, bwd)
    return report
