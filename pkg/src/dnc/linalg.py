"""Exact rank of sparse matrices over Q."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


def rank(vectors: Iterable[Mapping[object, int | Fraction]]) -> int:
    """Rank of the span of sparse vectors given as {coordinate: value} maps.

    Coordinates must be mutually comparable; elimination pivots on the
    smallest coordinate of each reduced vector.
    """
    pivots: dict = {}
    r = 0
    for vec in vectors:
        v = {k: Fraction(x) for k, x in vec.items() if x}
        while v:
            c = min(v)
            piv = pivots.get(c)
            if piv is None:
                inv = 1 / v[c]
                pivots[c] = {k: x * inv for k, x in v.items()}
                r += 1
                break
            f = v[c]
            for k, x in piv.items():
                y = v.get(k, 0) - f * x
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
    return r
