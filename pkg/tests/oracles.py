"""Independent reference computations (sympy only) used to derive frozen test values."""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement

import sympy


def _monomials(xs, d):
    return [sympy.Mul(*c) for c in combinations_with_replacement(xs, d)] if d >= 0 else []


def koszul_homology_dims(xs, fs, k, d):
    """dim_Q H_k(K(f; Q[xs]))_d with deg x = 1 and deg e_i = deg f_i."""
    xs = list(xs)
    degs = [sympy.Poly(f, *xs).total_degree() if f != 0 else 0 for f in fs]
    n = len(fs)

    def basis(kk):
        out = []
        for S in combinations(range(n), kk):
            for m in _monomials(xs, d - sum(degs[i] for i in S)):
                out.append((S, m))
        return out

    def matrix(kk):
        src, tgt = basis(kk), basis(kk - 1)
        index = {}
        for j, (S, m) in enumerate(tgt):
            index[(S, sympy.Poly(m, *xs).monoms()[0])] = j
        M = sympy.zeros(len(tgt), len(src))
        for col, (S, m) in enumerate(src):
            for pos, i in enumerate(S):
                T = S[:pos] + S[pos + 1:]
                img = sympy.Poly((-1) ** pos * fs[i] * m, *xs)
                for mono, c in img.terms():
                    M[index[(T, mono)], col] += c
        return M

    dim = len(basis(k))
    rk_out = matrix(k).rank() if k >= 1 and dim and basis(k - 1) else 0
    rk_in = matrix(k + 1).rank() if k + 1 <= n and basis(k + 1) and dim else 0
    return dim - rk_out - rk_in
