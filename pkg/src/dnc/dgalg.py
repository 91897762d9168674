"""Semifree commutative dg-algebras over Q.

Every algebra is free graded-commutative on a polynomial base Q[z] (all of
homological degree 0 and weight 0) together with bigraded generators.  Each
variable also carries an internal degree used to slice homology into finite
pieces.  Odd homological degree means exterior.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    BaseMismatch,
    CellNotCancellable,
    DegreeMismatch,
    DSquareNonzero,
    NameCollision,
    NameCollisionWarning,
    NotDegreeZero,
    WeightMismatch,
)
from .polycore import (
    DEGREVLEX,
    GroebnerBasis,
    Polynomial,
    Ring,
    buchberger,
    ideal_equal,
    substitute,
    transfer,
)


@dataclass(frozen=True)
class GeneratorSpec:
    name: str
    hdeg: int
    weight: int = 0
    degree: int | None = None


class SemifreeCDGA:
    """A presented cdga; build through :func:`make_cdga` to get validation."""

    def __init__(self, base: Ring, gens: Sequence[GeneratorSpec], diff: Mapping[str, object] | None = None,
                 base_degrees: Sequence[int] | None = None):
        if base.odd:
            raise ValueError("the base ring must be even")
        self.base = base.with_order(DEGREVLEX)
        self.base_degrees = tuple(base_degrees) if base_degrees is not None else (1,) * base.nvars
        if len(self.base_degrees) != base.nvars:
            raise ValueError("one degree per base variable required")
        names = list(base.names)
        for g in gens:
            if g.hdeg < 0:
                raise DegreeMismatch(f"negative homological degree for {g.name}")
            if g.name in names:
                raise NameCollision(f"generator name {g.name!r} already in use")
            names.append(g.name)
        odd = [g.name for g in gens if g.hdeg % 2]
        self.ring = Ring(names, DEGREVLEX, odd)
        self.nbase = base.nvars
        diff = dict(diff or {})
        for key in diff:
            if key not in self.ring.index or self.ring.index[key] < self.nbase:
                raise KeyError(f"differential given for non-generator {key!r}")
        self.diff = {}
        for g in gens:
            val = diff.get(g.name, 0)
            self.diff[g.name] = self._coerce(val)

        hd = [0] * self.nbase + [g.hdeg for g in gens]
        wt = [0] * self.nbase + [g.weight for g in gens]
        self.hdeg = tuple(hd)
        self.weight = tuple(wt)
        # resolve internal degrees, lower homological degree first
        degs: list = list(self.base_degrees) + [g.degree for g in gens]
        order = sorted(range(len(gens)), key=lambda j: (gens[j].hdeg, j))
        for j in order:
            i = self.nbase + j
            if degs[i] is not None:
                continue
            g = gens[j]
            dg = self.diff[g.name]
            if g.hdeg == 0:
                degs[i] = 1
            elif dg.is_zero():
                degs[i] = 0
            else:
                vals = []
                for e in dg.terms:
                    if any(x and degs[k] is None for k, x in enumerate(e)):
                        raise DegreeMismatch(f"cannot infer degree of {g.name}")
                    vals.append(sum(x * degs[k] for k, x in enumerate(e) if x))
                degs[i] = max(vals)
        self.degree = tuple(degs)
        self.gens = tuple(replace(g, degree=self.degree[self.nbase + j]) for j, g in enumerate(gens))
        self._dvar = [None] * self.nbase + [self.diff[g.name] for g in self.gens]
        self._dcache: dict = {}

    # ---- element helpers ----
    def _coerce(self, val) -> Polynomial:
        if isinstance(val, Polynomial):
            return val if val.ring == self.ring else transfer(val, self.ring)
        if isinstance(val, str):
            return self.ring.parse(val)
        return self.ring.const(val)

    def element(self, val) -> Polynomial:
        return self._coerce(val)

    def __call__(self, val) -> Polynomial:
        return self._coerce(val)

    @property
    def names(self) -> tuple[str, ...]:
        return self.ring.names

    @property
    def gen_names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.gens)

    def spec(self, name: str) -> GeneratorSpec:
        i = self.ring.index[name]
        if i < self.nbase:
            return GeneratorSpec(name, 0, 0, self.degree[i])
        return self.gens[i - self.nbase]

    def is_base(self, name: str) -> bool:
        return self.ring.index[name] < self.nbase

    def hdeg_of(self, exp) -> int:
        return sum(x * h for x, h in zip(exp, self.hdeg) if x)

    def weight_of(self, exp) -> int:
        return sum(x * w for x, w in zip(exp, self.weight) if x)

    def degree_of(self, exp) -> int:
        return sum(x * d for x, d in zip(exp, self.degree) if x)

    def hdeg0_names(self) -> list[str]:
        return [n for i, n in enumerate(self.names) if self.hdeg[i] == 0]

    def max_hdeg(self) -> int | None:
        """Largest homological degree with nonzero chains, or None if unbounded."""
        if any(g.hdeg > 0 and g.hdeg % 2 == 0 for g in self.gens):
            return None
        return sum(g.hdeg for g in self.gens if g.hdeg % 2)

    # ---- differential ----
    def d_monomial(self, exp) -> dict:
        cached = self._dcache.get(exp)
        if cached is not None:
            return cached
        ring = self.ring
        out: dict = {}
        parity = 0
        for i, a in enumerate(exp):
            if not a:
                continue
            dv = self._dvar[i]
            if dv is not None and dv.terms:
                prefix = tuple(x if k < i else 0 for k, x in enumerate(exp))
                rest = tuple(0 if k < i else (x - 1 if k == i else x) for k, x in enumerate(exp))
                coeff = a * (-1 if parity else 1)
                for e, c in dv.terms.items():
                    s1, m1 = ring.mono_mul(prefix, e)
                    if not s1:
                        continue
                    s2, m2 = ring.mono_mul(m1, rest)
                    if not s2:
                        continue
                    v = out.get(m2, 0) + s1 * s2 * coeff * c
                    if v:
                        out[m2] = v
                    else:
                        out.pop(m2, None)
            if i in ring.odd:
                parity ^= a & 1
        self._dcache[exp] = out
        return out

    def d(self, p) -> Polynomial:
        p = self._coerce(p)
        out: dict = {}
        for exp, c in p.terms.items():
            for m, v in self.d_monomial(exp).items():
                w = out.get(m, 0) + c * v
                if w:
                    out[m] = w
                else:
                    out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    # ---- structure ----
    def canonical_form(self) -> tuple:
        """Order-independent description used for presentation equality."""
        base = tuple(zip(self.base.names, self.base_degrees))
        gens = []
        for g in self.gens:
            dg = self.diff[g.name]
            terms = tuple(sorted(
                (tuple(sorted((self.names[i], x) for i, x in enumerate(e) if x)), c)
                for e, c in dg.terms.items()
            ))
            gens.append((g.name, g.hdeg, g.weight, g.degree, terms))
        return (base, tuple(sorted(gens)))

    def same_presentation(self, other: SemifreeCDGA, degrees: bool = True) -> bool:
        a, b = self.canonical_form(), other.canonical_form()
        if not degrees:
            a = (tuple(n for n, _ in a[0]), tuple((g[0], g[1], g[2], g[4]) for g in a[1]))
            b = (tuple(n for n, _ in b[0]), tuple((g[0], g[1], g[2], g[4]) for g in b[1]))
        return a == b

    def __eq__(self, other):
        return isinstance(other, SemifreeCDGA) and self.canonical_form() == other.canonical_form()

    def __hash__(self):
        return hash(self.canonical_form())

    def describe(self) -> dict:
        return {
            "base": [{"name": n, "degree": d} for n, d in zip(self.base.names, self.base_degrees)],
            "generators": [
                {"name": g.name, "hdeg": g.hdeg, "weight": g.weight, "degree": g.degree,
                 "d": str(self.diff[g.name])}
                for g in self.gens
            ],
        }

    def __repr__(self):
        cells = ", ".join(f"{g.name}:({g.hdeg},{g.weight})" for g in self.gens)
        diffs = "; ".join(f"d{g.name} = {self.diff[g.name]}" for g in self.gens if self.diff[g.name])
        return f"SemifreeCDGA(Q[{', '.join(self.base.names)}]<{cells}>{'; ' + diffs if diffs else ''})"

    def with_degrees(self, degrees: Mapping[str, int]) -> SemifreeCDGA:
        base_deg = [degrees.get(n, d) for n, d in zip(self.base.names, self.base_degrees)]
        gens = [replace(g, degree=degrees.get(g.name, g.degree)) for g in self.gens]
        return SemifreeCDGA(self.base, gens, self.diff, base_deg)


def make_cdga(base: Ring | Sequence[str], gens: Sequence[GeneratorSpec | tuple] = (),
              diff: Mapping[str, object] | None = None,
              base_degrees: Sequence[int] | None = None) -> SemifreeCDGA:
    """Validated constructor: checks degrees, weights and d^2 = 0 on every generator."""
    if not isinstance(base, Ring):
        base = Ring(base)
    gens = [g if isinstance(g, GeneratorSpec) else GeneratorSpec(*g) for g in gens]
    A = SemifreeCDGA(base, gens, diff, base_degrees)
    for g in A.gens:
        dg = A.diff[g.name]
        if g.hdeg == 0 and dg:
            raise DegreeMismatch(f"generator {g.name} of homological degree 0 must be a cycle")
        for e in dg.terms:
            if A.hdeg_of(e) != g.hdeg - 1:
                raise DegreeMismatch(f"d{g.name} has a term of homological degree {A.hdeg_of(e)}")
            if A.weight_of(e) != g.weight:
                raise WeightMismatch(f"d{g.name} has a term of weight {A.weight_of(e)}, expected {g.weight}")
    for g in A.gens:
        residue = A.d(A.diff[g.name])
        if residue:
            raise DSquareNonzero(g.name, residue)
    return A


def polynomial_algebra(base: Ring | Sequence[str], base_degrees: Sequence[int] | None = None) -> SemifreeCDGA:
    return make_cdga(base, (), {}, base_degrees)


def _fresh(taken: set, stem: str) -> str:
    name, k = stem, 1
    while name in taken:
        k += 1
        name = f"{stem}_{k}"
    return name


def _rebuild(A: SemifreeCDGA, base: Ring, gens, diffs, base_degrees=None) -> SemifreeCDGA:
    return make_cdga(base, gens, diffs, base_degrees if base_degrees is not None else A.base_degrees)


def derived_quotient(A: SemifreeCDGA, elems: Sequence[tuple[object, int]],
                     names: Sequence[str] | None = None) -> SemifreeCDGA:
    """Adjoin one homological-degree-1 cell killing each element."""
    taken = set(A.names)
    new_gens = list(A.gens)
    diffs = {g.name: A.diff[g.name] for g in A.gens}
    for k, (elem, weight) in enumerate(elems):
        p = A.element(elem)
        for e in p.terms:
            if A.hdeg_of(e) != 0:
                raise NotDegreeZero(f"{p} is not of homological degree 0")
            if A.weight_of(e) != weight:
                raise WeightMismatch(f"{p} does not have weight {weight}")
        if names is not None:
            name = names[k]
            if name in taken:
                raise NameCollision(f"cell name {name!r} already in use")
        else:
            j = 1
            while f"e{j}" in taken:
                j += 1
            name = f"e{j}"
        taken.add(name)
        new_gens.append(GeneratorSpec(name, 1, weight, None))
        diffs[name] = p
    ring = Ring(A.base.names + tuple(g.name for g in new_gens), DEGREVLEX,
                [g.name for g in new_gens if g.hdeg % 2])
    diffs = {k: transfer(v, ring) for k, v in diffs.items()}
    return make_cdga(A.base, new_gens, diffs, A.base_degrees)


def derived_tensor(A1: SemifreeCDGA, A2: SemifreeCDGA, over: Iterable[str] = ()) -> SemifreeCDGA:
    """Tensor product over the shared base (and the shared generators ``over``)."""
    if A1.base != A2.base or A1.base_degrees != A2.base_degrees:
        raise BaseMismatch("algebras must share the identical base")
    over = set(over)
    for name in over:
        if name not in A1.gen_names or name not in A2.gen_names:
            raise BaseMismatch(f"shared generator {name!r} missing from one factor")
        s1, s2 = A1.spec(name), A2.spec(name)
        if (s1.hdeg, s1.weight, s1.degree) != (s2.hdeg, s2.weight, s2.degree) \
                or str(A1.diff[name]) != str(A2.diff[name]):
            raise BaseMismatch(f"shared generator {name!r} differs between factors")
    taken = set(A1.names)
    rename = {}
    for g in A2.gens:
        if g.name in over:
            continue
        if g.name in taken:
            new = _fresh(taken | set(A2.names), g.name)
            rename[g.name] = new
        taken.add(rename.get(g.name, g.name))
    if rename:
        warnings.warn(f"renamed colliding generators {rename}", NameCollisionWarning, stacklevel=2)
    gens = list(A1.gens) + [replace(g, name=rename.get(g.name, g.name)) for g in A2.gens if g.name not in over]
    ring = Ring(A1.base.names + tuple(g.name for g in gens), DEGREVLEX, [g.name for g in gens if g.hdeg % 2])
    diffs = {g.name: transfer(A1.diff[g.name], ring) for g in A1.gens}
    images = {old: ring.gen(new) for old, new in rename.items()}
    for g in A2.gens:
        if g.name in over:
            continue
        diffs[rename.get(g.name, g.name)] = substitute(A2.diff[g.name], images, ring)
    return make_cdga(A1.base, gens, diffs, A1.base_degrees)


def base_change(A: SemifreeCDGA, subst: Mapping[str, object], new_base: Ring | Sequence[str] | None = None,
                base_degrees: Sequence[int] | None = None) -> SemifreeCDGA:
    """Substitute variables by elements; substituted generators are dropped.

    Targets are written in the resulting algebra's variables.  A generator
    mapped to itself is kept.
    """
    dropped = {n for n, v in subst.items() if not (isinstance(v, str) and v == n)}
    for n in subst:
        if n not in A.ring.index:
            raise KeyError(f"unknown variable {n!r}")
    if new_base is None:
        new_base = Ring([n for n in A.base.names if n not in dropped])
        if base_degrees is None:
            base_degrees = [d for n, d in zip(A.base.names, A.base_degrees) if n not in dropped]
    elif not isinstance(new_base, Ring):
        new_base = Ring(new_base)
    if base_degrees is None:
        old = dict(zip(A.base.names, A.base_degrees))
        base_degrees = [old.get(n, 1) for n in new_base.names]
    kept = [g for g in A.gens if g.name not in dropped]
    ring = Ring(new_base.names + tuple(g.name for g in kept), DEGREVLEX, [g.name for g in kept if g.hdeg % 2])
    tmp = SemifreeCDGA(new_base, kept, {}, base_degrees)
    images = {}
    for n, v in subst.items():
        if n not in dropped:
            continue
        img = tmp.element(v)
        spec = A.spec(n)
        for e in img.terms:
            if tmp.hdeg_of(e) != spec.hdeg:
                raise DegreeMismatch(f"image of {n} has the wrong homological degree")
            if tmp.weight_of(e) != spec.weight:
                raise WeightMismatch(f"image of {n} has the wrong weight")
        images[n] = img
    for n in A.base.names:
        if n not in images and n not in ring.index:
            raise KeyError(f"base variable {n!r} has no image in the new base")
    diffs = {g.name: substitute(A.diff[g.name], images, ring) for g in kept}
    B = make_cdga(new_base, kept, diffs, base_degrees)
    # substituted cells must commute with d
    for n, img in images.items():
        if A.spec(n).hdeg > 0:
            lhs = B.d(img)
            rhs = substitute(A.diff[n], images, ring)
            if lhs != rhs:
                raise DegreeMismatch(f"substitution for {n} does not commute with the differential")
    return B


def localize(A: SemifreeCDGA, g: str, inv_name: str | None = None, cell_name: str | None = None) -> SemifreeCDGA:
    """Adjoin g^-1 together with a cell imposing g * g^-1 = 1."""
    if g not in A.ring.index or A.spec(g).hdeg != 0:
        raise NotDegreeZero(f"can only localize at a homological-degree-0 variable, got {g!r}")
    spec = A.spec(g)
    taken = set(A.names)
    inv = inv_name or _fresh(taken, f"{g}_inv")
    cell = cell_name or _fresh(taken | {inv}, f"{g}_loc")
    gens = list(A.gens) + [GeneratorSpec(inv, 0, -spec.weight, -spec.degree),
                           GeneratorSpec(cell, 1, 0, 0)]
    ring = Ring(A.base.names + tuple(x.name for x in gens), DEGREVLEX, [x.name for x in gens if x.hdeg % 2])
    diffs = {x.name: transfer(A.diff[x.name], ring) for x in A.gens}
    diffs[cell] = ring.gen(g) * ring.gen(inv) - 1
    return make_cdga(A.base, gens, diffs, A.base_degrees)


def weight_zero_localization(A: SemifreeCDGA, g: str, names: Mapping[str, str] | None = None) -> SemifreeCDGA:
    """Presentation of the weight-0 part of A[g^-1] for a weight +-1 generator g.

    Each generator v other than g becomes v * g^(-weight(v)/weight(g)), renamed
    through ``names``; base variables are unchanged.
    """
    spec = A.spec(g)
    if spec.hdeg != 0 or A.is_base(g):
        raise NotDegreeZero(f"{g!r} must be a homological-degree-0 generator")
    if spec.weight not in (1, -1):
        raise WeightMismatch("weight-zero localization needs a generator of weight +-1")
    names = dict(names or {})
    gi = A.ring.index[g]
    gens = []
    for v in A.gens:
        if v.name == g:
            continue
        shift = -v.weight // spec.weight
        gens.append(GeneratorSpec(names.get(v.name, v.name), v.hdeg, 0, v.degree + shift * spec.degree))
    ring = Ring(A.base.names + tuple(v.name for v in gens), DEGREVLEX, [v.name for v in gens if v.hdeg % 2])
    pos = [None if i == gi else ring.index[names.get(n, n)] for i, n in enumerate(A.names)]
    diffs = {}
    for v in A.gens:
        if v.name == g:
            continue
        terms = {}
        for e, c in A.diff[v.name].terms.items():
            new = [0] * ring.nvars
            for i, x in enumerate(e):
                if x and pos[i] is not None:
                    new[pos[i]] = x
            terms[tuple(new)] = terms.get(tuple(new), 0) + c
        diffs[names.get(v.name, v.name)] = Polynomial(ring, terms)
    return make_cdga(A.base, gens, diffs, A.base_degrees)


def cancel_cell(A: SemifreeCDGA, e: str, s: str) -> SemifreeCDGA:
    """Remove a contractible pair (e, s) with d e = c*s - p, substituting s -> p/c."""
    if e not in A.gen_names or s not in A.gen_names:
        raise CellNotCancellable("both e and s must be generators")
    se, ss = A.spec(e), A.spec(s)
    if se.hdeg != ss.hdeg + 1:
        raise CellNotCancellable("e must sit one homological degree above s")
    de = A.diff[e]
    si = A.ring.index[s]
    unit = tuple(1 if i == si else 0 for i in range(A.ring.nvars))
    lead = de.terms.get(unit)
    if lead is None:
        raise CellNotCancellable(f"d{e} = {de} has no linear term in {s}")
    rest = Polynomial._raw(A.ring, {m: c for m, c in de.terms.items() if m != unit})
    if s in rest.variables():
        raise CellNotCancellable(f"{s} occurs non-linearly in d{e} = {de}")
    for g in A.gens:
        if g.name != e and e in A.diff[g.name].variables():
            raise CellNotCancellable(f"{e} occurs in d{g.name}")
    gens = [g for g in A.gens if g.name not in (e, s)]
    ring = Ring(A.base.names + tuple(g.name for g in gens), DEGREVLEX, [g.name for g in gens if g.hdeg % 2])
    image = transfer(rest * (-1 / lead), ring)
    diffs = {g.name: substitute(A.diff[g.name], {s: image}, ring) for g in gens}
    return make_cdga(A.base, gens, diffs, A.base_degrees)


# ---------- modules and Sym ----------

@dataclass(frozen=True)
class DGModuleSpec:
    """Finite free dg module; ``diff`` maps a generator to {generator: coefficient}."""

    algebra: SemifreeCDGA
    gens: tuple[GeneratorSpec, ...]
    diff: Mapping[str, Mapping[str, object]] = field(default_factory=dict)

    @property
    def rank(self) -> int:
        return len(self.gens)


def sym_algebra(M: DGModuleSpec) -> SemifreeCDGA:
    """Free graded-commutative algebra on M over its algebra."""
    A = M.algebra
    gens = list(A.gens) + list(M.gens)
    ring = Ring(A.base.names + tuple(g.name for g in gens), DEGREVLEX, [g.name for g in gens if g.hdeg % 2])
    diffs = {g.name: transfer(A.diff[g.name], ring) for g in A.gens}
    for g in M.gens:
        total = ring.zero()
        for target, coeff in dict(M.diff.get(g.name, {})).items():
            c = transfer(A.element(coeff), ring) if not isinstance(coeff, (int, Fraction)) else ring.const(coeff)
            total = total + c * ring.gen(target)
        diffs[g.name] = total
    return make_cdga(A.base, gens, diffs, A.base_degrees)


# ---------- pi_0 ----------

@dataclass(frozen=True)
class Pi0Presentation:
    ring: Ring
    relations: tuple[Polynomial, ...]
    ideal: GroebnerBasis

    def contains(self, p: Polynomial) -> bool:
        return self.ideal.contains(transfer(p, self.ring))

    def normal_form(self, p: Polynomial) -> Polynomial:
        return self.ideal.reduce(transfer(p, self.ring))

    def is_zero_ring(self) -> bool:
        return self.ideal.is_unit()

    def same_as(self, other: Pi0Presentation) -> bool:
        if self.ring != other.ring:
            return False
        return ideal_equal(list(self.ideal.basis), list(other.ideal.basis), ring=self.ring)

    def describe(self) -> dict:
        return {"variables": list(self.ring.names), "ideal": self.ideal.strings()}


def pi0(A: SemifreeCDGA) -> Pi0Presentation:
    """Exact classical truncation: hdeg-0 variables modulo the images of 1-cells."""
    ring = Ring(A.hdeg0_names())
    rels = tuple(transfer(A.diff[g.name], ring) for g in A.gens if g.hdeg == 1)
    return Pi0Presentation(ring, rels, buchberger(list(rels), ring=ring))


def rescale(A: SemifreeCDGA, factors: Mapping[str, int | Fraction]) -> SemifreeCDGA:
    """Isomorphic algebra obtained by replacing each generator v with factors[v] * v."""
    ring = A.ring
    for n, c in factors.items():
        if n not in A.gen_names or not c:
            raise ValueError(f"cannot rescale {n!r} by {c}")
    images = {n: ring.gen(n) * Fraction(c) for n, c in factors.items()}
    diffs = {}
    for g in A.gens:
        dg = substitute(A.diff[g.name], images, ring)
        diffs[g.name] = dg / Fraction(factors.get(g.name, 1))
    return make_cdga(A.base, A.gens, diffs, A.base_degrees)
