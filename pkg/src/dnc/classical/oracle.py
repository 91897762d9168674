"""Classical Rees algebras, blow-up charts and normal cones by elimination.

This module deliberately depends on the polynomial layer only, so that it can
serve as an independent reference for the derived constructions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..errors import EmptyCenter
from ..polycore import GroebnerBasis, Polynomial, Ring, buchberger, eliminate, ideal_equal, ideal_power, substitute, transfer


@dataclass(frozen=True)
class ClassicalReesIdeal:
    """Kernel of Q[z][X] (plus tinv when extended) -> Q[z][T, T^-1], X_i -> f_i T."""

    ring: Ring
    ideal: GroebnerBasis
    labels: tuple[str, ...]
    param: str | None
    ambient: tuple[str, ...]

    @property
    def extended(self) -> bool:
        return self.param is not None

    def weights(self) -> dict[str, int]:
        w = {z: 0 for z in self.ambient}
        w.update({x: 1 for x in self.labels})
        if self.param:
            w[self.param] = -1
        return w


def _setup(ambient: Ring, gens: Sequence[Polynomial | str]):
    polys = [ambient(g) for g in gens]
    if not polys:
        raise EmptyCenter("the classical oracle needs at least one generator")
    return polys


def _fresh(names, stem):
    name = stem
    while name in names:
        name = "_" + name
    return name


def classical_rees(ambient: Ring, gens: Sequence[Polynomial | str], labels: Sequence[str] | None = None,
                   extended: bool = False, param: str = "tinv") -> ClassicalReesIdeal:
    polys = _setup(ambient, gens)
    n = len(polys)
    labels = tuple(labels) if labels is not None else tuple(f"X{i}" for i in range(1, n + 1))
    keep = list(ambient.names) + ([param] if extended else []) + list(labels)
    T = _fresh(keep, "T")
    big = Ring(keep + [T])
    rel = [big.gen(x) - transfer(f, big) * big.gen(T) for x, f in zip(labels, polys)]
    if extended:
        rel.append(big.gen(T) * big.gen(param) - 1)
    ring = Ring(keep)
    kernel = [transfer(p, ring) for p in eliminate(rel, keep, big)]
    return ClassicalReesIdeal(ring, buchberger(kernel, ring=ring), labels, param if extended else None,
                              tuple(ambient.names))


def classical_blowup_chart(ambient: Ring, gens: Sequence[Polynomial | str], j: int,
                           chart_names: dict[int, str]) -> GroebnerBasis:
    """Chart X_j = 1 of the classical blow-up, with X_i renamed to chart_names[i]."""
    polys = _setup(ambient, gens)
    K = classical_rees(ambient, polys)
    n = len(polys)
    ring = Ring(list(ambient.names) + [chart_names[i] for i in range(1, n + 1) if i != j])
    images = {K.labels[j - 1]: ring.one()}
    for i in range(1, n + 1):
        if i != j:
            images[K.labels[i - 1]] = ring.gen(chart_names[i])
    return buchberger([substitute(p, images, ring) for p in K.ideal.basis], ring=ring)


def classical_normal_cone(ambient: Ring, gens: Sequence[Polynomial | str],
                          labels: Sequence[str] | None = None) -> GroebnerBasis:
    """Ideal of the associated graded algebra: Rees ideal plus (f) in Q[z][X]."""
    polys = _setup(ambient, gens)
    K = classical_rees(ambient, polys, labels)
    return buchberger(list(K.ideal.basis) + [transfer(f, K.ring) for f in polys], ring=K.ring)


def power_slice_check(ambient: Ring, gens: Sequence[Polynomial | str], n_max: int = 5) -> dict[int, bool]:
    """Weight-n piece of the classical Rees algebra against the ideal power I^n.

    (K_ext + tinv^n) meets Q[z] exactly in I^n when weight n of the Rees
    algebra is I^n * T^n.
    """
    polys = _setup(ambient, gens)
    K = classical_rees(ambient, polys, extended=True)
    out = {}
    for n in range(1, n_max + 1):
        rel = list(K.ideal.basis) + [K.ring.gen(K.param) ** n]
        cut = [transfer(p, ambient) for p in eliminate(rel, ambient.names, K.ring)]
        out[n] = ideal_equal(cut, ideal_power(polys, n), ring=ambient)
    return out
