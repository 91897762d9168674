from __future__ import annotations

from dnc.blowup import (
    blowup_charts,
    check_excessive,
    exceptional_divisor,
    make_square,
    transition,
    verify_deformation_as_blowup,
)
from dnc.dgalg import pi0
from dnc.homology import homology_table
from dnc.rees import make_center

# Blow up the origin of the plane
plane = make_center(["x", "y"], ["x", "y"])
charts = blowup_charts(plane)
for ch in charts:
    t = homology_table(ch.cdga, (1, ch.cdga.max_hdeg()), 0, 6)
    print(f"chart {ch.index}: pi0 ideal {pi0(ch.cdga).ideal.strings()}, "
          f"exceptional equation {ch.exceptional_equation}, higher homology vanishes {t.vanishes_above(0)}")
    print("   exceptional divisor pi0:", pi0(exceptional_divisor(ch)).describe())

rep = transition(charts, 1, 2)
print("transition 2 -> 1:", rep.images, "chain map:", rep.chain_map, "iso:", rep.iso.ok)

# A non-regular center: chart 2 of (x^2, x*y) keeps an embedded component along x = 0
for ch in blowup_charts(make_center(["x", "y"], ["x^2", "x*y"])):
    print(f"(x^2, xy) chart {ch.index}:", pi0(ch.cdga).ideal.strings())

# The deformation space is itself a blow-up of Y x A^1 along X x 0
print("deformation as blow-up:", verify_deformation_as_blowup(make_center(["u"], ["u"])).ok)

# Functoriality needs excessive squares
sq = make_square(plane, make_center(["x"], ["x"]), {"x": "x", "y": "0"}, [["1"], ["0"]])
print("origin in axis in plane:", check_excessive(sq).to_dict())
bad = make_square(make_center(["x"], ["x^2"]), make_center(["x"], ["x"]), {"x": "x"}, [["x"]])
print("(x^2) against (x):", check_excessive(bad).to_dict())
