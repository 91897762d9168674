from __future__ import annotations

import numpy as np

from dnc.dgalg import derived_quotient, derived_tensor, pi0, polynomial_algebra
from dnc.homology import homology_table

# The Koszul algebra of (x^2, x*y): cells e1, e2 with d e1 = x^2, d e2 = x*y
A = polynomial_algebra(["x", "y"])
K = derived_quotient(A, [("x^2", 0), ("x*y", 0)])
for g in K.gens:
    print(f"d {g.name} = {K.diff[g.name]}")

# d is a graded derivation; the odd cells anticommute
print("d(e1*e2) =", K.d("e1*e2"))

t = homology_table(K, (0, 2), 0, 6)
print("certified band:", t.certified_band, "grading:", t.mode)
dims = np.array([[t.dim(k, 0, d) for d in range(t.certified_band + 1)] for k in range(3)])
print("rows = hdeg, columns = internal degree")
print(dims)
# H_1 starts in degree 3: the syzygy y*e1 - x*e2

# Self-intersection of the origin in the line: two copies of the same cell
S = derived_tensor(derived_quotient(polynomial_algebra(["x"]), [("x", 0)], names=["e1"]),
                   derived_quotient(polynomial_algebra(["x"]), [("x", 0)], names=["e2"]))
s = homology_table(S, (0, 2), 0, 6)
print("self-intersection H_1:", [s.dim(1, 0, d) for d in range(s.certified_band + 1)])
print("pi0:", pi0(S).describe())
