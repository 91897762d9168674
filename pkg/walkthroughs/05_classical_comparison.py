from __future__ import annotations

from dnc.classical import classical_rees, compare_classical_blowup, compare_classical_deformation
from dnc.rees import make_center

# The elimination oracle computes the classical Rees ideal without touching any cdga
c = make_center(["x", "y"], ["x^2", "x*y"])
print("classical Rees ideal:", classical_rees(c.ambient, c.gens).ideal.strings())
print("classical extended:", classical_rees(c.ambient, c.gens, extended=True).ideal.strings())

# pi0 of the derived object surjects onto the classical one, and saturating at tinv closes the gap
for gens in (["x", "y"], ["x^2", "x*y"]):
    rep = compare_classical_deformation(make_center(["x", "y"], gens))
    print(gens, "closure equal:", rep.closure_equal, "| torsion:", rep.torsion)

rep = compare_classical_blowup(c)
for j, ok in rep.charts.items():
    print(f"chart {j}: equal after saturation {ok}, already classical {rep.no_op[j]}, classical {rep.classical[j]}")
