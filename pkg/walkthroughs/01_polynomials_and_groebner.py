from __future__ import annotations

from dnc.polycore import Ring, buchberger, eliminate, ideal_equal, ideal_power, normal_form, saturate

# Rings are ordered lists of variable names over Q; the default order is degrevlex.
R = Ring(["x", "y"])
I = [R.parse("x^2 - 1"), R.parse("x*y - 1")]

gb = buchberger(I)
print("reduced basis:", gb.strings())
print("x^2 reduces to", normal_form(R.parse("x^2"), gb))

# Coefficients stay exact rationals all the way through
print(R.parse("x/3 + 2/7*y") * 21)

# Ideal equality is equality of reduced bases
print(ideal_equal(I, [R.parse("x - y"), R.parse("y^2 - 1")], ring=R))

# Eliminating x from the parabola y = x^2 leaves nothing: the projection is onto
print("eliminate x:", eliminate([R.parse("y - x^2")], ["y"], R))

# Saturation strips components supported on f = 0
T = Ring(["tinv", "X1", "X2"])
print("saturate:", buchberger(saturate([T.parse("tinv*(X1 - X2)")], T.gen("tinv"), T)).strings())

print("(x^2, x*y)^2 =", buchberger(ideal_power([R.parse("x^2"), R.parse("x*y")], 2, R)).strings())
