from __future__ import annotations

from dnc.rees import (
    compare_special_fiber,
    deformation_fiber,
    generic_fiber_basis,
    make_center,
    rees_extended,
    rees_structure,
)

# The redundant center (x, x) in Q[x]: classically just the origin, derivedly not
c = make_center(["x"], ["x", "x"])
R = rees_extended(c)
for g in R.cdga.gens:
    print(f"{g.name:5s} hdeg={g.hdeg} weight={g.weight:+d} d={R.cdga.diff[g.name]}")

P = R.pi0()
print("pi0 ideal:", P.ideal.strings())
print("tinv*(X1 - X2) vanishes in pi0:", P.contains(P.ring.parse("tinv*(X1 - X2)")))
print("X1 - X2 vanishes in pi0:", P.contains(P.ring.parse("X1 - X2")))

s = rees_structure(R)
print("weights <= 0 free:", s.nonpositive_free, "| weight-1 image:", s.fil1_image,
      "| weight-1 torsion free:", s.weight_one_torsion_free)

# Away from tinv = 0 the family is constant
gb, expected = generic_fiber_basis(R)
print("generic fiber basis:", gb.strings())

# At tinv = 0 it is the normal cone: Sym of the conormal complex over the Koszul algebra
F = deformation_fiber(R, "special").cdga
print("special fiber cells:", {g.name: str(F.diff[g.name]) for g in F.gens if g.hdeg})
rep = compare_special_fiber(R, 6)
print("matches normal cone:", rep.presentation_equal, "| tables agree:", rep.tables_agree, "| band:", rep.band)
