"""Exact multivariate polynomials over Q and Groebner-basis algorithms.

Monomials are exponent tuples indexed by the ring's variable order.  A ring
may declare some variables *odd*; those anticommute and square to zero,
which is all the graded-commutative algebra code needs.  Groebner-basis
routines are only meaningful on rings without odd variables.
"""

from __future__ import annotations

import contextvars
import itertools
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DuplicateVariable, MixedRings, ParseError, UnknownVariable, ZeroSaturant

_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*\Z")


# ---------- monomial orders ----------

def _drl(exp):
    return (sum(exp), tuple(-e for e in reversed(exp)))


@dataclass(frozen=True)
class MonomialOrder:
    """A total monomial order; larger key means larger monomial.

    ``block`` lists the variable indices of the first (eliminated) block for
    ``kind == "block"``; each block is compared by degrevlex.
    """

    kind: str = "degrevlex"
    block: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    def key(self, exp):
        if self.kind == "degrevlex":
            return _drl(exp)
        if self.kind == "lex":
            return exp
        first = tuple(exp[i] for i in self.block)
        rest = tuple(e for i, e in enumerate(exp) if i not in self.block)
        return (_drl(first), _drl(rest))

    def describe(self) -> str:
        if self.kind == "block":
            return "block(" + ",".join(map(str, self.block)) + ")"
        return self.kind


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


def block_order(first: int | Iterable[int]) -> MonomialOrder:
    """Two-block order whose first block is ``range(first)`` or the given indices."""
    if isinstance(first, int):
        idx = tuple(range(first))
    else:
        idx = tuple(sorted(set(first)))
    return MonomialOrder("block", idx)


# ---------- rings ----------

class Ring:
    """Ordered variable names over Q, with an optional set of odd variables."""

    def __init__(self, names: Sequence[str], order: MonomialOrder = DEGREVLEX, odd: Iterable = ()):
        names = tuple(names)
        seen = set()
        for n in names:
            if not _IDENT.match(n):
                raise ParseError(f"invalid variable name {n!r}")
            if n in seen:
                raise DuplicateVariable(f"duplicate variable {n!r}")
            seen.add(n)
        self.names = names
        self.order = order
        self.index = {n: i for i, n in enumerate(names)}
        odd_idx = set()
        for v in odd:
            odd_idx.add(self.index[v] if isinstance(v, str) else int(v))
        self.odd = frozenset(odd_idx)
        self._odd_sorted = tuple(sorted(self.odd))
        self.nvars = len(names)
        self._zero_exp = (0,) * self.nvars

    def __eq__(self, other):
        return isinstance(other, Ring) and self.names == other.names and self.odd == other.odd

    def __hash__(self):
        return hash((self.names, self.odd))

    def __repr__(self):
        return f"Ring({', '.join(self.names)})"

    def with_order(self, order: MonomialOrder) -> Ring:
        return Ring(self.names, order, self.odd)

    def extend(self, names: Sequence[str], odd: Iterable[str] = ()) -> Ring:
        return Ring(self.names + tuple(names), self.order,
                    [self.names[i] for i in self.odd] + list(odd))

    def fresh_name(self, stem: str) -> str:
        name, k = stem, 0
        while name in self.index:
            k += 1
            name = f"{stem}{k}"
        return name

    # element constructors
    def zero(self) -> Polynomial:
        return Polynomial._raw(self, {})

    def one(self) -> Polynomial:
        return self.const(1)

    def const(self, c) -> Polynomial:
        c = Fraction(c)
        return Polynomial._raw(self, {self._zero_exp: c} if c else {})

    def gen(self, name: str) -> Polynomial:
        if name not in self.index:
            raise UnknownVariable(f"unknown variable {name!r}")
        exp = [0] * self.nvars
        exp[self.index[name]] = 1
        return Polynomial._raw(self, {tuple(exp): Fraction(1)})

    def gens(self) -> list[Polynomial]:
        return [self.gen(n) for n in self.names]

    def monomial(self, exp: Sequence[int], coeff=1) -> Polynomial:
        return Polynomial(self, {tuple(exp): coeff})

    def parse(self, text: str) -> Polynomial:
        return _Parser(text, self).parse()

    def __call__(self, value) -> Polynomial:
        if isinstance(value, Polynomial):
            return transfer(value, self)
        if isinstance(value, str):
            return self.parse(value)
        return self.const(value)

    # monomial arithmetic
    def mono_mul(self, a, b):
        """Return (sign, exponent) of the product a*b, or (0, None) if it vanishes."""
        exp = tuple(x + y for x, y in zip(a, b))
        if not self.odd:
            return 1, exp
        inversions = 0
        for q in self._odd_sorted:
            if b[q]:
                if a[q]:
                    return 0, None
                for p in self._odd_sorted:
                    if p > q and a[p]:
                        inversions += 1
        return (-1 if inversions & 1 else 1), exp


# ---------- polynomials ----------

class Polynomial:
    """Sparse polynomial with Fraction coefficients; treat as immutable."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping | None = None):
        self.ring = ring
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != ring.nvars:
                raise ValueError("exponent length does not match ring")
            if any(exp[i] > 1 for i in ring.odd):
                continue
            c = Fraction(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, ring, terms):
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._hash = None
        return p

    # basic queries
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get(self.ring._zero_exp, Fraction(0))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.ring.index[name]
        return max((e[i] for e in self.terms), default=-1)

    def variables(self) -> set[str]:
        used = set()
        for e in self.terms:
            used.update(self.ring.names[i] for i, x in enumerate(e) if x)
        return used

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        vals = {self._wdeg(e, weights) for e in self.terms}
        return len(vals) <= 1

    def weighted_degrees(self, weights: Sequence[int]) -> set[int]:
        return {self._wdeg(e, weights) for e in self.terms}

    @staticmethod
    def _wdeg(e, weights):
        if weights is None:
            return sum(e)
        return sum(x * w for x, w in zip(e, weights))

    def leading(self, order: MonomialOrder | None = None):
        """(exponent, coefficient) of the leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = (order or self.ring.order).key
        exp = max(self.terms, key=key)
        return exp, self.terms[exp]

    def monic(self, order: MonomialOrder | None = None) -> Polynomial:
        if not self.terms:
            return self
        _, c = self.leading(order)
        return self * (1 / c)

    # arithmetic
    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise MixedRings(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return Polynomial._raw(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if not other:
                return self.ring.zero()
            return Polynomial._raw(self.ring, {e: c * other for e, c in self.terms.items()})
        other = self._check(other)
        if other is NotImplemented:
            return other
        ring = self.ring
        terms: dict = {}
        mm = ring.mono_mul
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                s, e = mm(e1, e2)
                if s:
                    v = terms.get(e, 0) + s * c1 * c2
                    if v:
                        terms[e] = v
                    else:
                        terms.pop(e, None)
        return Polynomial._raw(ring, terms)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # printing / serialization
    def sorted_terms(self, order: MonomialOrder | None = None):
        key = (order or self.ring.order).key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.names
        out = []
        for exp, c in self.sorted_terms():
            factors = []
            for i, x in enumerate(exp):
                if x == 1:
                    factors.append(names[i])
                elif x > 1:
                    factors.append(f"{names[i]}^{x}")
            mag = abs(c)
            if factors:
                body = "*".join(factors) if mag == 1 else f"{mag}*" + "*".join(factors)
            else:
                body = str(mag)
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"Polynomial({self})"

    def to_data(self) -> list:
        return [[list(e), str(c)] for e, c in sorted(self.terms.items())]

    @classmethod
    def from_data(cls, ring: Ring, data) -> Polynomial:
        return cls(ring, {tuple(e): Fraction(c) for e, c in data})


# ---------- parsing ----------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.text = text
        self.ring = ring
        self.tokens = []
        pos = 0
        while True:
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos and not m.group(0):
                break
            if m.group(1):
                self.tokens.append(("num", int(m.group(1)), m.start(1)))
            elif m.group(2):
                self.tokens.append(("id", m.group(2), m.start(2)))
            elif m.group(3):
                self.tokens.append(("op", m.group(3), m.start(3)))
            else:
                break
            pos = m.end()
        self.tokens.append(("end", None, len(text)))
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, op):
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            raise ParseError(f"expected {op!r}", tok[2])
        return tok

    def parse(self) -> Polynomial:
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected token {tok[1]!r}", tok[2])
        return p

    def expr(self):
        p = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            _, op, pos = self.take()
            q = self.unary()
            if op == "*":
                p = p * q
            else:
                if not q.is_constant() or q.is_zero():
                    raise ParseError("division only by a nonzero constant", pos)
                p = p * (1 / q.constant_value())
        return p

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            p = self.unary()
            return -p if tok[1] == "-" else p
        return self.power()

    def power(self):
        p = self.atom()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.take()
            num = self.take()
            if num[0] != "num":
                raise ParseError("exponent must be a non-negative integer", num[2])
            p = p ** num[1]
        return p

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            return self.ring.const(val)
        if kind == "id":
            if val not in self.ring.index:
                raise UnknownVariable(f"unknown variable {val!r}", pos)
            return self.ring.gen(val)
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect(")")
            return p
        raise ParseError(f"unexpected token {val!r}" if val is not None else "unexpected end of input", pos)


# ---------- ring maps ----------

def transfer(p: Polynomial, ring: Ring) -> Polynomial:
    """Move ``p`` into ``ring`` by matching variable names."""
    if p.ring == ring:
        return Polynomial._raw(ring, p.terms)
    pos = []
    for i, n in enumerate(p.ring.names):
        if n in ring.index:
            pos.append(ring.index[n])
        else:
            pos.append(None)
    terms = {}
    for e, c in p.terms.items():
        new = [0] * ring.nvars
        for i, x in enumerate(e):
            if x:
                if pos[i] is None:
                    raise UnknownVariable(f"variable {p.ring.names[i]!r} not in target ring")
                new[pos[i]] = x
        terms[tuple(new)] = c
    return Polynomial(ring, terms)


def substitute(p: Polynomial, images: Mapping[str, Polynomial], target: Ring) -> Polynomial:
    """Apply the ring map sending each variable to ``images[name]`` (or to itself by name)."""
    cache = {}

    def image(i, k):
        if (i, k) not in cache:
            name = p.ring.names[i]
            img = images[name] if name in images else target.gen(name)
            if isinstance(img, (int, Fraction)):
                img = target.const(img)
            elif img.ring != target:
                img = transfer(img, target)
            cache[(i, k)] = img ** k
        return cache[(i, k)]

    out = target.zero()
    for e, c in p.terms.items():
        t = target.const(c)
        for i, x in enumerate(e):
            if x:
                t = t * image(i, x)
        out = out + t
    return out


def common_ring(polys: Sequence[Polynomial], ring: Ring | None = None) -> Ring:
    for p in polys:
        if ring is None:
            ring = p.ring
        elif p.ring != ring:
            raise MixedRings(f"{p.ring} vs {ring}")
    if ring is None:
        raise ValueError("cannot infer the ring of an empty generator list")
    return ring


# ---------- Groebner bases ----------

GB_CACHE: contextvars.ContextVar = contextvars.ContextVar("dnc_gb_cache", default=None)


@dataclass(frozen=True)
class GroebnerBasis:
    ring: Ring
    order: MonomialOrder
    basis: tuple[Polynomial, ...]

    def reduce(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self)

    def contains(self, p: Polynomial) -> bool:
        return normal_form(p, self).is_zero()

    def contains_all(self, polys: Iterable[Polynomial]) -> bool:
        return all(self.contains(p) for p in polys)

    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant()

    def is_zero_ideal(self) -> bool:
        return not self.basis

    def leading_monomials(self):
        return [g.leading(self.order)[0] for g in self.basis]

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def strings(self) -> list[str]:
        return [str(g) for g in self.basis]


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _reduce_terms(terms: dict, basis, key) -> dict:
    """Full reduction of a term dict by monic (lm, terms) pairs."""
    p = dict(terms)
    rem = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for lm, gterms in basis:
            if _divides(lm, m):
                q = tuple(a - b for a, b in zip(m, lm))
                for gm, gc in gterms.items():
                    mm = tuple(a + b for a, b in zip(q, gm))
                    v = p.get(mm, 0) - c * gc
                    if v:
                        p[mm] = v
                    else:
                        p.pop(mm, None)
                break
        else:
            rem[m] = c
            del p[m]
    return rem


def _monic_terms(terms, key):
    lm = max(terms, key=key)
    c = terms[lm]
    if c == 1:
        return lm, dict(terms)
    inv = 1 / c
    return lm, {e: v * inv for e, v in terms.items()}


def _cache_key(ring: Ring, gens, order: MonomialOrder) -> str:
    payload = {
        "names": list(ring.names),
        "odd": sorted(ring.odd),
        "order": [order.kind, list(order.block)],
        "gens": sorted(json.dumps(g.to_data()) for g in gens if g),
    }
    return json.dumps(payload, sort_keys=True)


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder | None = None,
               ring: Ring | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pairs are processed by the normal selection strategy with Buchberger's
    coprime and chain criteria.
    """
    ring = common_ring(gens, ring)
    if ring.odd:
        raise ValueError("Groebner bases require a ring without odd variables")
    order = order or ring.order
    cache = GB_CACHE.get()
    ckey = None
    if cache is not None:
        ckey = _cache_key(ring, gens, order)
        hit = cache.lookup(ckey)
        if hit is not None:
            return GroebnerBasis(ring, order, tuple(Polynomial.from_data(ring, d) for d in hit))

    memo = {}

    def key(e):
        k = memo.get(e)
        if k is None:
            k = memo[e] = order.key(e)
        return k

    G: list = []
    pairs: set = set()

    def add(terms):
        lm, terms = _monic_terms(terms, key)
        G.append((lm, terms))
        new = len(G) - 1
        for i in range(new):
            pairs.add((i, new))

    for g in gens:
        if g.terms:
            r = _reduce_terms(g.terms, G, key)
            if r:
                add(r)

    def lcm(a, b):
        return tuple(max(x, y) for x, y in zip(a, b))

    done: set = set()
    while pairs:
        i, j = min(pairs, key=lambda ij: (key(lcm(G[ij[0]][0], G[ij[1]][0])), ij))
        pairs.discard((i, j))
        done.add((i, j))
        lmi, gi = G[i]
        lmj, gj = G[j]
        L = lcm(lmi, lmj)
        if all(a == 0 or b == 0 for a, b in zip(lmi, lmj)):
            continue
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if _divides(G[k][0], L):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik not in pairs and pjk not in pairs:
                    skip = True
                    break
        if skip:
            continue
        ui = tuple(a - b for a, b in zip(L, lmi))
        uj = tuple(a - b for a, b in zip(L, lmj))
        s = {}
        for e, c in gi.items():
            s[tuple(a + b for a, b in zip(e, ui))] = c
        for e, c in gj.items():
            m = tuple(a + b for a, b in zip(e, uj))
            v = s.get(m, 0) - c
            if v:
                s[m] = v
            else:
                s.pop(m, None)
        if not s:
            continue
        r = _reduce_terms(s, G, key)
        if r:
            add(r)

    # minimalize then interreduce
    minimal = []
    for idx, (lm, terms) in sorted(enumerate(G), key=lambda t: (key(t[1][0]), t[0])):
        if not any(_divides(m, lm) for m, _ in minimal):
            minimal.append((lm, terms))
    reduced = []
    for idx, (lm, terms) in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        tail = {e: c for e, c in terms.items() if e != lm}
        tail = _reduce_terms(tail, others, key)
        tail[lm] = Fraction(1)
        reduced.append((lm, tail))
    reduced.sort(key=lambda t: key(t[0]), reverse=True)
    basis = tuple(Polynomial._raw(ring, terms) for _, terms in reduced)
    if cache is not None:
        cache.store(ckey, [g.to_data() for g in basis])
    return GroebnerBasis(ring, order, basis)


def groebner(gens: Sequence[Polynomial], order: MonomialOrder | None = None, ring: Ring | None = None) -> GroebnerBasis:
    return buchberger(gens, order, ring)


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    if p.ring != gb.ring:
        raise MixedRings(f"{p.ring} vs {gb.ring}")
    order = gb.order
    memo = {}

    def key(e):
        k = memo.get(e)
        if k is None:
            k = memo[e] = order.key(e)
        return k

    basis = [(g.leading(order)[0], g.terms) for g in gb.basis]
    return Polynomial._raw(p.ring, _reduce_terms(p.terms, basis, key))


def ideal_equal(I: Sequence[Polynomial], J: Sequence[Polynomial], order: MonomialOrder | None = None,
                ring: Ring | None = None) -> bool:
    ring = common_ring(list(I) + list(J), ring)
    a = buchberger(I, order, ring)
    b = buchberger(J, order, ring)
    return a.basis == b.basis


def ideal_contains(I: Sequence[Polynomial] | GroebnerBasis, J: Sequence[Polynomial],
                   ring: Ring | None = None) -> bool:
    """True iff every element of J lies in the ideal I."""
    gb = I if isinstance(I, GroebnerBasis) else buchberger(I, ring=common_ring(list(I) + list(J), ring))
    return gb.contains_all(J)


def elimination_order(ring: Ring, eliminate_names: Iterable[str]) -> MonomialOrder:
    return block_order(ring.index[n] for n in eliminate_names)


def eliminate(I: Sequence[Polynomial], keep: Iterable[str], ring: Ring | None = None) -> list[Polynomial]:
    """Generators of I intersected with Q[keep]; results stay in the ambient ring."""
    ring = common_ring(I, ring)
    keep = set(keep)
    unknown = keep - set(ring.names)
    if unknown:
        raise UnknownVariable(f"unknown variables {sorted(unknown)}")
    drop = [i for i, n in enumerate(ring.names) if n not in keep]
    if not drop:
        return list(buchberger(I, ring=ring).basis)
    gb = buchberger(I, block_order(drop), ring)
    return [g for g in gb.basis if all(e[i] == 0 for e in g.terms for i in drop)]


def saturate(I: Sequence[Polynomial], f: Polynomial, ring: Ring | None = None) -> list[Polynomial]:
    """Reduced basis of I : f^infinity by the Rabinowitsch trick."""
    ring = common_ring(list(I) + [f], ring)
    if f.is_zero():
        raise ZeroSaturant("cannot saturate at the zero polynomial")
    w = ring.fresh_name("w_sat")
    big = ring.extend([w])
    gens = [transfer(p, big) for p in I] + [big.gen(w) * transfer(f, big) - 1]
    elim = eliminate(gens, ring.names, big)
    return list(buchberger([transfer(p, ring) for p in elim], ring=ring).basis)


def ideal_power(I: Sequence[Polynomial], n: int, ring: Ring | None = None) -> list[Polynomial]:
    """All n-fold products of the generators; I^0 = (1)."""
    if n < 0:
        raise ValueError("ideal power must be non-negative")
    I = [p for p in I if p]
    if n == 0:
        if ring is None:
            ring = I[0].ring if I else None
        if ring is None:
            raise ValueError("ring required for the zeroth power of an empty ideal")
        return [ring.one()]
    if I:
        common_ring(I, ring)
    out, seen = [], set()
    for combo in itertools.combinations_with_replacement(range(len(I)), n):
        prod = I[combo[0]]
        for k in combo[1:]:
            prod = prod * I[k]
        if prod and prod not in seen:
            seen.add(prod)
            out.append(prod)
    return out


def ideal_product(I: Sequence[Polynomial], J: Sequence[Polynomial]) -> list[Polynomial]:
    out, seen = [], set()
    for p in I:
        for q in J:
            r = p * q
            if r and r not in seen:
                seen.add(r)
                out.append(r)
    return out
