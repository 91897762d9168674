"""Extended Rees algebras of presented closed immersions.

For a center f_1..f_n in Q[z] the extended Rees algebra is presented as
Q[z][tinv, X_1..X_n] with one cell e_i per generator and d e_i = X_i*tinv - f_i.
tinv has weight -1, each X_i weight +1, and tinv has internal degree 0 so
that the presentation stays homogeneous whenever the f_i are.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .dgalg import (
    DGModuleSpec,
    GeneratorSpec,
    Pi0Presentation,
    SemifreeCDGA,
    base_change,
    derived_quotient,
    localize,
    make_cdga,
    pi0,
    polynomial_algebra,
    rescale,
    sym_algebra,
)
from .errors import NameCollision
from .homology import HomologyTable, homology_table, weight_piece
from .polycore import (
    GroebnerBasis,
    Polynomial,
    Ring,
    block_order,
    buchberger,
    ideal_equal,
    transfer,
)

PARAM = "tinv"


@dataclass(frozen=True)
class CenterPresentation:
    ambient: Ring
    gens: tuple[Polynomial, ...]
    labels: tuple[str, ...]
    cells: tuple[str, ...]
    param: str = PARAM

    @property
    def n(self) -> int:
        return len(self.gens)

    def describe(self) -> dict:
        return {"ambient": list(self.ambient.names), "center": [str(f) for f in self.gens]}


def make_center(ambient: Ring | Sequence[str], gens: Sequence[Polynomial | str] = (),
                labels: Sequence[str] | None = None, cells: Sequence[str] | None = None,
                param: str = PARAM) -> CenterPresentation:
    ring = ambient if isinstance(ambient, Ring) else Ring(ambient)
    polys = tuple(ring(g) for g in gens)
    n = len(polys)
    labels = tuple(labels) if labels is not None else tuple(f"X{i}" for i in range(1, n + 1))
    cells = tuple(cells) if cells is not None else tuple(f"e{i}" for i in range(1, n + 1))
    if len(labels) != n or len(cells) != n:
        raise ValueError("need one label and one cell name per generator")
    names = list(ring.names) + [param] + list(labels) + list(cells)
    if len(set(names)) != len(names):
        raise NameCollision(f"center variable names clash: {names}")
    return CenterPresentation(ring, polys, labels, cells, param)


def label_degree(f: Polynomial) -> int:
    """Internal degree given to the Rees variable of f."""
    if f.is_zero():
        return 1
    return f.total_degree()


@dataclass(frozen=True)
class ReesPresentation:
    cdga: SemifreeCDGA
    center: CenterPresentation

    @property
    def param(self) -> str:
        return self.center.param

    def pi0(self) -> Pi0Presentation:
        return pi0(self.cdga)


def rees_extended(center: CenterPresentation) -> ReesPresentation:
    c = center
    gens = [GeneratorSpec(c.param, 0, -1, 0)]
    gens += [GeneratorSpec(x, 0, 1, label_degree(f)) for x, f in zip(c.labels, c.gens)]
    gens += [GeneratorSpec(e, 1, 0, None) for e in c.cells]
    ring = Ring(c.ambient.names + tuple(g.name for g in gens), odd=c.cells)
    diffs = {}
    for x, e, f in zip(c.labels, c.cells, c.gens):
        diffs[e] = ring.gen(x) * ring.gen(c.param) - transfer(f, ring)
    return ReesPresentation(make_cdga(c.ambient, gens, diffs), c)


# ---------- fibers ----------

@dataclass(frozen=True)
class DeformationFiber:
    kind: str
    cdga: SemifreeCDGA


def deformation_fiber(R: ReesPresentation, kind: str) -> DeformationFiber:
    if kind == "special":
        return DeformationFiber(kind, base_change(R.cdga, {R.param: 0}))
    if kind == "generic":
        return DeformationFiber(kind, localize(R.cdga, R.param, inv_name="t", cell_name="e_t"))
    raise ValueError(f"unknown fiber kind {kind!r}")


def generic_fiber_basis(R: ReesPresentation) -> tuple[GroebnerBasis, list[Polynomial]]:
    """Reduced basis of pi0 after inverting tinv, with the Rees variables eliminated first.

    Returns the basis and the expected one {X_i - f_i*t, t*tinv - 1}.
    """
    P = pi0(deformation_fiber(R, "generic").cdga)
    ring = P.ring
    c = R.center
    order = block_order([ring.index[x] for x in c.labels])
    gb = buchberger(list(P.relations), order, ring)
    t = ring.gen("t")
    expected = [ring.gen(x) - transfer(f, ring) * t for x, f in zip(c.labels, c.gens)]
    expected.append(t * ring.gen(c.param) - 1)
    return gb, expected


def generic_fiber_check(R: ReesPresentation) -> bool:
    gb, expected = generic_fiber_basis(R)
    want = buchberger(expected, gb.order, gb.ring)
    return set(gb.basis) == set(want.basis) and set(want.basis) == {p.monic(gb.order) for p in expected}


def conormal_model(center: CenterPresentation) -> DGModuleSpec:
    """Rank-n free module in hdeg 0 over the Koszul algebra of the center."""
    c = center
    K = derived_quotient(polynomial_algebra(c.ambient), [(f, 0) for f in c.gens], names=list(c.cells))
    gens = tuple(GeneratorSpec(x, 0, 1, label_degree(f)) for x, f in zip(c.labels, c.gens))
    return DGModuleSpec(K, gens, {})


def normal_cone_model(center: CenterPresentation) -> SemifreeCDGA:
    return sym_algebra(conormal_model(center))


def special_fiber_normalized(R: ReesPresentation) -> SemifreeCDGA:
    """Special fiber with each cell replaced by its negative, so that d e_i = f_i."""
    S = deformation_fiber(R, "special").cdga
    return rescale(S, {e: -1 for e in R.center.cells})


@dataclass
class SpecialFiberReport:
    presentation_equal: bool
    tables_agree: bool | None
    band: int | None
    fiber: SemifreeCDGA
    cone: SemifreeCDGA
    fiber_table: HomologyTable | None = None
    cone_table: HomologyTable | None = None


def compare_special_fiber(R: ReesPresentation, D: int = 6, hdegs=(0, 2), weights=(0, 2)) -> SpecialFiberReport:
    fiber = special_fiber_normalized(R)
    cone = normal_cone_model(R.center)
    equal = fiber.same_presentation(cone)
    ta = tb = None
    agree = band = None
    if D is not None:
        ta = homology_table(deformation_fiber(R, "special").cdga, hdegs, weights, D)
        tb = homology_table(cone, hdegs, weights, D)
        band = min(ta.certified_band, tb.certified_band)
        agree = ta.agrees_with(tb)
    return SpecialFiberReport(equal, agree, band, fiber, cone, ta, tb)


# ---------- weight structure at pi0 ----------

def rees_order_basis(R: ReesPresentation) -> GroebnerBasis:
    """Reduced basis of pi0(R) in a block order ranking the Rees variables first."""
    P = R.pi0()
    ring = P.ring
    rees = [ring.index[R.param]] + [ring.index[x] for x in R.center.labels]
    return buchberger(list(P.relations), block_order(rees), ring)


@dataclass
class ReesStructureReport:
    nonpositive_free: bool
    generated_in_weight_one: bool
    fil1_equals_ideal: bool
    fil1_image: list[str]
    weight_one_torsion_free: bool
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.nonpositive_free and self.generated_in_weight_one and self.fil1_equals_ideal


def _rees_monomials(ring: Ring, labels, param, weight: int, extra: int):
    """Monomials tinv^a X^alpha of the given weight with a <= extra + max(0, -weight)."""
    tinv = ring.gen(param)
    xs = [ring.gen(x) for x in labels]
    top = extra + max(0, -weight)
    for a in range(0, top + 1):
        m = a + weight
        if m < 0:
            continue
        if m > 0 and not xs:
            continue
        for combo in itertools.combinations_with_replacement(range(len(xs)), m):
            mono = tinv ** a
            for i in combo:
                mono = mono * xs[i]
            yield mono, combo


def rees_structure(R: ReesPresentation, depth: int = 2) -> ReesStructureReport:
    """Exact Groebner checks on the weight decomposition of pi0(R).

    * weights <= 0: the Q[z]*tinv^k are independent (no leading monomial free of
      the X variables) and every weight -k monomial reduces into Q[z]*tinv^k;
    * weight w >= 1 normal forms only use monomials with X-degree >= w;
    * multiplying weight 1 by tinv lands on the ideal (f) inside Q[z].
    """
    gb = rees_order_basis(R)
    ring = gb.ring
    c = R.center
    ti = ring.index[c.param]
    xi = [ring.index[x] for x in c.labels]
    zi = [ring.index[z] for z in c.ambient.names]

    x_free_lead = []
    for lm in gb.leading_monomials():
        if not any(lm[i] for i in xi):
            x_free_lead.append(lm)
    independent = not x_free_lead
    # unit ideal only happens for an inconsistent center, which cannot occur here
    spans = True
    for k in range(0, depth + 1):
        for mono, combo in _rees_monomials(ring, c.labels, c.param, -k, depth):
            nf = gb.reduce(mono)
            for e in nf.terms:
                if any(e[i] for i in xi) or e[ti] != k:
                    spans = False
            fprod = ring.one()
            for i in combo:
                fprod = fprod * transfer(c.gens[i], ring)
            if gb.reduce(fprod * ring.gen(c.param) ** k) != nf:
                spans = False

    generated = True
    for w in range(1, depth + 1):
        for mono, _ in _rees_monomials(ring, c.labels, c.param, w, depth):
            for e in gb.reduce(mono).terms:
                if sum(e[i] for i in xi) < w:
                    generated = False

    zring = c.ambient
    images = []
    ok_image = True
    for x in c.labels:
        nf = gb.reduce(ring.gen(c.param) * ring.gen(x))
        if any(e[i] for e in nf.terms for i in range(ring.nvars) if i not in zi):
            ok_image = False
            continue
        images.append(transfer(nf, zring))
    fil1 = buchberger(images, ring=zring) if images else buchberger([], ring=zring)
    fil_equal = ok_image and ideal_equal(list(fil1.basis), list(c.gens), ring=zring)

    # weight-1 tinv-torsion: some weight-1 standard combination killed by tinv
    torsion_free = _weight_one_torsion_free(R, gb)
    return ReesStructureReport(independent and spans, generated, fil_equal, fil1.strings(), torsion_free,
                               {"x_free_leading_monomials": len(x_free_lead)})


def _weight_one_torsion_free(R: ReesPresentation, gb: GroebnerBasis) -> bool:
    """tinv acts injectively on weight 1 iff no weight-1 element of the saturation is missing from J."""
    from .polycore import saturate

    ring = gb.ring
    sat = saturate(list(gb.basis), ring.gen(R.param), ring)
    return all(gb.contains(p) for p in sat)


# ---------- weight components and the adic filtration ----------

@dataclass
class WeightComponent:
    weight: int
    cutoff: int
    basis: dict
    table: HomologyTable
    free_check: bool | None
    derived_check: bool | None

    def to_dict(self) -> dict:
        return {
            "weight": self.weight,
            "cutoff": self.cutoff,
            "basis": {f"{k},{d}": [str(m) for m in v] for (k, d), v in sorted(self.basis.items())},
            "table": self.table.to_dict(),
            "free_check": self.free_check,
            "derived_check": self.derived_check,
        }


def _poly_dims(ring_size: int, d: int) -> int:
    from math import comb

    if d < 0:
        return 0
    return comb(d + ring_size - 1, ring_size - 1) if ring_size else int(d == 0)


def weight_component(R: ReesPresentation, n: int, D: int, hdegs=None) -> WeightComponent:
    """Basis and homology of the weight-n part up to cutoff D.

    For n <= 0 the homology is compared with Q[z]*tinv^(-n); for n = 1 with the
    fibre of Q[z] -> Q[z]//(f) (H_0 = H_1(K) + (f), H_k = H_(k+1)(K)).
    Both comparisons need the native grading and are None otherwise.
    """
    A = R.cdga
    top = A.max_hdeg()
    ks = hdegs if hdegs is not None else (0, top)
    table = homology_table(A, ks, n, D)
    basis = weight_piece(A, n, D, hdegs=range(ks[0], ks[1] + 1))
    m = R.center.ambient.nvars
    band = table.certified_band
    free = derived = None
    native = table.mode == "native"
    if n <= 0:
        free = rees_structure(R, depth=max(1, -n)).nonpositive_free
        if native:
            derived = all(
                table.dim(k, n, d) == (_poly_dims(m, d) if k == 0 else 0)
                for k in range(ks[0], ks[1] + 1) for d in range(0, band + 1)
            )
    elif n == 1 and native:
        K = derived_quotient(polynomial_algebra(R.center.ambient), [(f, 0) for f in R.center.gens],
                             names=list(R.center.cells))
        kt = homology_table(K, (0, (K.max_hdeg() or 0) + 1), 0, D)
        derived = True
        for d in range(0, min(band, kt.certified_band) + 1):
            if table.dim(0, 1, d) != kt.dim(1, 0, d) + _poly_dims(m, d) - kt.dim(0, 0, d):
                derived = False
            for k in range(max(1, ks[0]), ks[1] + 1):
                if table.dim(k, 1, d) != kt.dim(k + 1, 0, d):
                    derived = False
    return WeightComponent(n, D, basis, table, free, derived)


@dataclass
class FiltrationPiece:
    """Fil_n = weight-n part of R, generated over weight 0 by ``generators``."""

    n: int
    generators: list[Polynomial]
    image: GroebnerBasis

    def describe(self) -> dict:
        return {"n": self.n, "generators": [str(g) for g in self.generators], "image": self.image.strings()}


def adic_filtration(R: ReesPresentation, n: int) -> FiltrationPiece:
    """Generators of Fil_n and its image tinv^n * Fil_n inside Q[z]."""
    if n < 0:
        raise ValueError("filtration index must be non-negative")
    gb = rees_order_basis(R)
    ring = gb.ring
    c = R.center
    xs = [ring.gen(x) for x in c.labels]
    gens = []
    if n == 0 or xs:
        for combo in itertools.combinations_with_replacement(range(len(xs)), n):
            mono = ring.one()
            for i in combo:
                mono = mono * xs[i]
            gens.append(mono)
    shift = ring.gen(c.param) ** n
    image = [transfer(gb.reduce(shift * g), c.ambient) for g in gens]
    return FiltrationPiece(n, gens, buchberger(image, ring=c.ambient))
