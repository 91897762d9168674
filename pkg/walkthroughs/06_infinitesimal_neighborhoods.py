from __future__ import annotations

import numpy as np

from dnc.infnbhd import filtration_tower, inf_neighborhood, pi0_ideal_check, verify_inf_triangles
from dnc.rees import make_center, rees_extended

c = make_center(["x", "y"], ["x", "y"])
R = rees_extended(c)

# Killing tinv^(n+1) and keeping weight 0 gives the n-th neighborhood
X2 = inf_neighborhood(R, 2)
print("new cell:", X2.cell, "d =", X2.cdga.diff[X2.cell], "weight", X2.cdga.spec(X2.cell).weight)
print("pi0 kernel:", X2.pi0_kernel().strings())

for n in (1, 2, 3):
    rep = pi0_ideal_check(c, n)
    print(f"n={n}: kernel equals I^k for k in {rep.matches}")

for level in filtration_tower(R, 3):
    print(level.n, level.kernel, level.surjects_on_previous, level.nilpotent)

# Euler characteristics per internal degree add up along both triangles
rep = verify_inf_triangles(make_center(["x"], ["x", "x"]), 2, 6)
print("triangles:", rep.ok, "band", rep.band)
t = X2.table(6)
print(np.array([[t.dim(k, 0, d) for d in range(t.certified_band + 1)] for k in range(3)]))
